#pragma once

// Full analysis pipeline and its report. The report is plain rendered data
// (strings, numbers, flags): the machine format is versioned JSON that
// round-trips, the human format is an aligned text summary. Every value is
// recomputed on each run; nothing is cached across runs.

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tvg/ramification.hpp"
#include "tvg/spec_file.hpp"

namespace tvg {

inline constexpr int kReportSchemaVersion = 1;

struct PseudoReflectionRow {
  std::string element;
  std::uint32_t beta = 0;  // 1-based variable number of the line's pivot
  std::string line;
  friend bool operator==(const PseudoReflectionRow&, const PseudoReflectionRow&) = default;
};

struct SeriesStepReport {
  std::size_t order = 0;
  std::string witness;
  std::uint32_t beta = 0;  // 1-based
  friend bool operator==(const SeriesStepReport&, const SeriesStepReport&) = default;
};

struct RingReport {
  std::string name;  // e.g. "S^G1"
  std::size_t group_order = 0;
  bool certified = false;
  std::optional<std::uint64_t> quotient_dimension;
  std::vector<std::uint32_t> degrees;
  std::vector<std::string> generators;
  friend bool operator==(const RingReport&, const RingReport&) = default;
};

struct DifferentReport {
  std::string ring_tag;
  std::vector<std::pair<std::string, std::uint32_t>> factors;
  std::string expanded;
  std::uint64_t degree = 0;
  friend bool operator==(const DifferentReport&, const DifferentReport&) = default;
};

struct StageReport {
  std::size_t index = 0;  // position in the series; 0 for an explicit G'
  std::size_t upper_order = 0, lower_order = 0;
  std::string sigma;
  std::string status = "ok";  // "ok" or "capped: <reason>"
  bool standing_beta_ok = false;

  std::uint32_t d_min = 0;
  std::string witness;

  DifferentReport different_s_over_r, different_s_over_a, different_a_over_r;
  bool a_over_r_g_invariant = false;
  bool a_over_r_support_ok = false;

  std::vector<std::string> ramif_s_over_r, ramif_s_over_a_over_r, ramif_a_over_r_generators;
  std::vector<bool> ramif_generator_invariant;

  bool is_split = false;
  std::uint64_t deg_different = 0;
  std::string witness_trace;
  std::string split_scalar;  // empty when not split

  std::string closed_forms;  // "agree", "not-applicable: <why>"
  std::string orbit_witness; // "none", "found: <s>", "capped: <reason>"
  std::size_t orbit_trace_tests = 0;

  friend bool operator==(const StageReport&, const StageReport&) = default;
};

struct AnalysisReport {
  int schema_version = kReportSchemaVersion;
  unsigned p = 0, k = 0;
  std::vector<unsigned> modulus;
  std::vector<std::string> vars;
  std::vector<std::pair<std::string, std::string>> bindings;

  std::size_t group_order = 0;
  std::optional<std::uint32_t> group_beta;  // 1-based; absent without reflections
  std::vector<PseudoReflectionRow> reflections;
  bool transvection_generated = false;

  std::vector<SeriesStepReport> series;
  std::vector<RingReport> rings;
  std::vector<StageReport> stages;

  std::string overall;  // "ok" or "partial"

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

namespace detail {

inline std::string element_to_string(const GroupElement& g, const std::vector<std::string>& vars,
                                     const ScalarNamer& namer) {
  std::string out;
  for (std::uint32_t i = 0; i < g.nvars(); ++i) {
    LinearForm d = g.image(i);
    d.coeffs[i] = d.coeffs[i] - g.field().one();
    if (d.is_zero()) continue;
    if (!out.empty()) out += ", ";
    out += vars[i] + " -> " + vars[i] + " + " + linear_form_to_string(d, vars, namer);
  }
  return out.empty() ? "identity" : out;
}

inline DifferentReport render_different(const DifferentCertificate& cert, const Field& f,
                                        std::uint32_t n, const std::vector<std::string>& vars,
                                        const ScalarNamer& namer) {
  DifferentReport rep;
  rep.ring_tag = cert.ring_tag;
  for (const auto& [l, e] : cert.factors)
    rep.factors.emplace_back(linear_form_to_string(l, vars, namer), e);
  rep.expanded = poly_to_string(cert.expand(f, n), vars, namer);
  rep.degree = cert.degree();
  return rep;
}

}  // namespace detail

/// Runs the whole pipeline on a parsed spec. Resource-cap failures in a
/// stage are recorded on that stage (status "capped: ...") and flip the
/// overall status to "partial"; nothing is fabricated.
inline AnalysisReport analyze(const GroupSpecFile& spec) {
  const Field& f = *spec.field;
  const std::uint32_t n = spec.nvars;
  ScalarNamer namer = spec.scalar_namer();

  AnalysisReport rep;
  rep.p = f.p();
  rep.k = f.k();
  rep.modulus = f.modulus();
  rep.vars = spec.var_names;
  for (const auto& [name, val] : spec.bindings)
    rep.bindings.emplace_back(name, scalar_to_string(val));

  std::vector<GroupElement> gens;
  for (const auto& [name, g] : spec.generators) gens.push_back(g);
  Group g = Group::enumerate(f, n, gens, spec.options.order_cap);
  rep.group_order = g.order();
  if (!g.pseudo_reflections().empty())
    rep.group_beta = beta_of_group(g) + 1;
  for (const auto& info : g.pseudo_reflections())
    rep.reflections.push_back({detail::element_to_string(info.element, spec.var_names, namer),
                               info.beta + 1,
                               linear_form_to_string(info.line, spec.var_names, namer)});
  rep.transvection_generated = g.is_transvection_generated();

  // stages to analyze: (upper, lower, sigma, index)
  struct StagePair {
    Group upper, lower;
    GroupElement sigma;
    std::size_t index;
  };
  std::vector<StagePair> pairs;
  std::vector<Group> chain_groups;
  std::vector<std::string> chain_names;

  if (!spec.options.gprime.empty()) {
    std::vector<GroupElement> sub;
    for (const auto& name : spec.options.gprime) sub.push_back(spec.generator(name));
    Group gp = subgroup(g, sub, spec.options.order_cap);
    // canonical coset transvection: smallest (beta, key) outside G'
    std::optional<GroupElement> sigma;
    for (const auto& info : g.pseudo_reflections()) {
      if (gp.contains(info.element)) continue;
      if (!sigma || transvection_info(*sigma).beta > info.beta ||
          (transvection_info(*sigma).beta == info.beta && info.element.key() < sigma->key()))
        sigma = info.element;
    }
    if (!sigma) throw SpecError("no transvection outside the chosen subgroup");
    pairs.push_back({g, gp, *sigma, 0});
    chain_groups = {gp, g};
    chain_names = {"S^G'", "S^G"};
  } else if (rep.transvection_generated) {
    CompositionSeries series = composition_series(g);
    std::string why;
    if (!validate_series(g, series, &why)) throw Error("series validation failed: " + why);
    for (std::size_t i = 1; i < series.chain.size(); ++i) {
      rep.series.push_back({series.chain[i].order(),
                            detail::element_to_string(series.witnesses[i - 1], spec.var_names, namer),
                            transvection_info(series.witnesses[i - 1]).beta + 1});
      pairs.push_back({series.chain[i], series.chain[i - 1], series.witnesses[i - 1], i});
    }
    for (std::size_t i = 0; i < series.chain.size(); ++i) {
      chain_groups.push_back(series.chain[i]);
      chain_names.push_back("S^G" + std::to_string(i));
    }
  }

  bool partial = false;

  for (std::size_t i = 0; i < chain_groups.size(); ++i) {
    RingReport rr;
    rr.name = chain_names[i];
    rr.group_order = chain_groups[i].order();
    GeneratorSet gs = minimal_generators(chain_groups[i], spec.options.degree_cap);
    rr.certified = gs.certified_complete;
    rr.quotient_dimension = gs.quotient_dimension;
    rr.degrees = gs.degrees;
    for (const auto& gen : gs.gens)
      rr.generators.push_back(poly_to_string(gen, spec.var_names, namer));
    if (!rr.certified) partial = true;
    rep.rings.push_back(std::move(rr));
  }

  AnalysisContext ctx;
  for (const auto& pr : pairs) {
    StageReport st;
    st.index = pr.index;
    st.upper_order = pr.upper.order();
    st.lower_order = pr.lower.order();
    st.sigma = detail::element_to_string(pr.sigma, spec.var_names, namer);
    try {
      Ramif1Report ram = ramif1(pr.upper, pr.lower);
      st.standing_beta_ok = ram.standing_beta_ok;
      for (const auto& l : ram.s_over_r)
        st.ramif_s_over_r.push_back(linear_form_to_string(l, spec.var_names, namer));
      for (const auto& l : ram.s_over_a_over_r)
        st.ramif_s_over_a_over_r.push_back(linear_form_to_string(l, spec.var_names, namer));
      for (const auto& q : ram.a_over_r_generators)
        st.ramif_a_over_r_generators.push_back(poly_to_string(q, spec.var_names, namer));
      st.ramif_generator_invariant = ram.a_over_r_generator_invariant;

      st.different_s_over_r = detail::render_different(
          different_over_invariants(pr.upper, ctx, "S/R"), f, n, spec.var_names, namer);
      st.different_s_over_a = detail::render_different(
          different_over_invariants(pr.lower, ctx, "S/A"), f, n, spec.var_names, namer);
      RelativeDifferent rel = different_of_extension(pr.upper, pr.lower, ctx);
      st.different_a_over_r = detail::render_different(rel.cert, f, n, spec.var_names, namer);
      st.a_over_r_g_invariant = rel.g_invariant;
      st.a_over_r_support_ok = rel.support_matches;

      SplitVerdict v = split_test(pr.upper, pr.lower, pr.sigma, ctx, spec.options.min_degree_cap);
      st.d_min = v.d_min;
      st.witness = poly_to_string(v.witness, spec.var_names, namer);
      st.is_split = v.is_split;
      st.deg_different = v.deg_different;
      st.witness_trace = poly_to_string(v.witness_trace, spec.var_names, namer);
      if (v.scalar) st.split_scalar = scalar_to_string(*v.scalar, namer);

      std::int64_t bsig = transvection_info(pr.sigma).beta;
      if (bsig > beta_or_sentinel(pr.lower) && moved_variables(pr.sigma).size() == 1) {
        different_closed_forms(pr.upper, pr.lower, pr.sigma, ctx);  // throws on any mismatch
        st.closed_forms = "agree";
      } else if (bsig <= beta_or_sentinel(pr.lower)) {
        st.closed_forms = "not-applicable: beta of sigma does not exceed beta of the subgroup";
      } else {
        st.closed_forms = "not-applicable: sigma moves more than one variable";
      }

      OrbitWitnessOptions wopts;
      wopts.enumeration_cap = spec.options.witness_cap;
      wopts.whole_field = spec.options.witness_whole_field;
      try {
        OrbitWitnessResult ow = search_linear_orbit_witness(pr.upper, pr.lower, pr.sigma,
                                                            rel.cert, wopts);
        st.orbit_trace_tests = ow.trace_tests;
        st.orbit_witness =
            ow.witness_found ? "found: " + poly_to_string(*ow.witness, spec.var_names, namer)
                             : "none";
      } catch (const CapError& e) {
        st.orbit_witness = std::string("capped: ") + e.what();
        partial = true;
      }
    } catch (const CapError& e) {
      st.status = std::string("capped: ") + e.what();
      partial = true;
    }
    rep.stages.push_back(std::move(st));
  }

  rep.overall = partial ? "partial" : "ok";
  return rep;
}

// ---- machine format ---------------------------------------------------------

namespace detail {

using Json = nlohmann::ordered_json;

inline Json different_to_json(const DifferentReport& d) {
  Json j;
  j["ring"] = d.ring_tag;
  j["factors"] = Json::array();
  for (const auto& [l, e] : d.factors) j["factors"].push_back({{"line", l}, {"exponent", e}});
  j["expanded"] = d.expanded;
  j["degree"] = d.degree;
  return j;
}

inline DifferentReport different_from_json(const Json& j) {
  DifferentReport d;
  d.ring_tag = j.at("ring").get<std::string>();
  for (const auto& f : j.at("factors"))
    d.factors.emplace_back(f.at("line").get<std::string>(), f.at("exponent").get<std::uint32_t>());
  d.expanded = j.at("expanded").get<std::string>();
  d.degree = j.at("degree").get<std::uint64_t>();
  return d;
}

}  // namespace detail

inline std::string emit_machine(const AnalysisReport& r) {
  using detail::Json;
  Json j;
  j["schema_version"] = r.schema_version;
  j["field"] = {{"p", r.p}, {"k", r.k}, {"modulus", r.modulus}};
  j["vars"] = r.vars;
  j["bindings"] = Json::array();
  for (const auto& [name, val] : r.bindings)
    j["bindings"].push_back({{"name", name}, {"value", val}});
  j["group"]["order"] = r.group_order;
  if (r.group_beta)
    j["group"]["beta"] = *r.group_beta;
  else
    j["group"]["beta"] = nullptr;
  j["group"]["transvection_generated"] = r.transvection_generated;
  j["group"]["pseudo_reflections"] = Json::array();
  for (const auto& row : r.reflections)
    j["group"]["pseudo_reflections"].push_back(
        {{"element", row.element}, {"beta", row.beta}, {"line", row.line}});
  j["series"] = Json::array();
  for (const auto& s : r.series)
    j["series"].push_back({{"order", s.order}, {"witness", s.witness}, {"beta", s.beta}});
  j["rings"] = Json::array();
  for (const auto& ring : r.rings) {
    Json jr;
    jr["name"] = ring.name;
    jr["group_order"] = ring.group_order;
    jr["certified"] = ring.certified;
    if (ring.quotient_dimension)
      jr["quotient_dimension"] = *ring.quotient_dimension;
    else
      jr["quotient_dimension"] = nullptr;
    jr["degrees"] = ring.degrees;
    jr["generators"] = ring.generators;
    j["rings"].push_back(std::move(jr));
  }
  j["stages"] = Json::array();
  for (const auto& st : r.stages) {
    Json js;
    js["index"] = st.index;
    js["upper_order"] = st.upper_order;
    js["lower_order"] = st.lower_order;
    js["sigma"] = st.sigma;
    js["status"] = st.status;
    js["standing_beta_ok"] = st.standing_beta_ok;
    js["d_min"] = st.d_min;
    js["witness"] = st.witness;
    js["different_s_over_r"] = detail::different_to_json(st.different_s_over_r);
    js["different_s_over_a"] = detail::different_to_json(st.different_s_over_a);
    js["different_a_over_r"] = detail::different_to_json(st.different_a_over_r);
    js["a_over_r_g_invariant"] = st.a_over_r_g_invariant;
    js["a_over_r_support_ok"] = st.a_over_r_support_ok;
    js["ramif_s_over_r"] = st.ramif_s_over_r;
    js["ramif_s_over_a_over_r"] = st.ramif_s_over_a_over_r;
    js["ramif_a_over_r_generators"] = st.ramif_a_over_r_generators;
    js["ramif_generator_invariant"] = st.ramif_generator_invariant;
    js["is_split"] = st.is_split;
    js["deg_different"] = st.deg_different;
    js["witness_trace"] = st.witness_trace;
    js["split_scalar"] = st.split_scalar;
    js["closed_forms"] = st.closed_forms;
    js["orbit_witness"] = st.orbit_witness;
    js["orbit_trace_tests"] = st.orbit_trace_tests;
    j["stages"].push_back(std::move(js));
  }
  j["overall"] = r.overall;
  return j.dump(2) + "\n";
}

inline AnalysisReport parse_machine(const std::string& text) {
  using detail::Json;
  Json j = Json::parse(text);
  AnalysisReport r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kReportSchemaVersion)
    throw SpecError("unsupported report schema version");
  r.p = j.at("field").at("p").get<unsigned>();
  r.k = j.at("field").at("k").get<unsigned>();
  r.modulus = j.at("field").at("modulus").get<std::vector<unsigned>>();
  r.vars = j.at("vars").get<std::vector<std::string>>();
  for (const auto& b : j.at("bindings"))
    r.bindings.emplace_back(b.at("name").get<std::string>(), b.at("value").get<std::string>());
  r.group_order = j.at("group").at("order").get<std::size_t>();
  if (!j.at("group").at("beta").is_null())
    r.group_beta = j.at("group").at("beta").get<std::uint32_t>();
  r.transvection_generated = j.at("group").at("transvection_generated").get<bool>();
  for (const auto& row : j.at("group").at("pseudo_reflections"))
    r.reflections.push_back({row.at("element").get<std::string>(),
                             row.at("beta").get<std::uint32_t>(),
                             row.at("line").get<std::string>()});
  for (const auto& s : j.at("series"))
    r.series.push_back({s.at("order").get<std::size_t>(), s.at("witness").get<std::string>(),
                        s.at("beta").get<std::uint32_t>()});
  for (const auto& jr : j.at("rings")) {
    RingReport ring;
    ring.name = jr.at("name").get<std::string>();
    ring.group_order = jr.at("group_order").get<std::size_t>();
    ring.certified = jr.at("certified").get<bool>();
    if (!jr.at("quotient_dimension").is_null())
      ring.quotient_dimension = jr.at("quotient_dimension").get<std::uint64_t>();
    ring.degrees = jr.at("degrees").get<std::vector<std::uint32_t>>();
    ring.generators = jr.at("generators").get<std::vector<std::string>>();
    r.rings.push_back(std::move(ring));
  }
  for (const auto& js : j.at("stages")) {
    StageReport st;
    st.index = js.at("index").get<std::size_t>();
    st.upper_order = js.at("upper_order").get<std::size_t>();
    st.lower_order = js.at("lower_order").get<std::size_t>();
    st.sigma = js.at("sigma").get<std::string>();
    st.status = js.at("status").get<std::string>();
    st.standing_beta_ok = js.at("standing_beta_ok").get<bool>();
    st.d_min = js.at("d_min").get<std::uint32_t>();
    st.witness = js.at("witness").get<std::string>();
    st.different_s_over_r = detail::different_from_json(js.at("different_s_over_r"));
    st.different_s_over_a = detail::different_from_json(js.at("different_s_over_a"));
    st.different_a_over_r = detail::different_from_json(js.at("different_a_over_r"));
    st.a_over_r_g_invariant = js.at("a_over_r_g_invariant").get<bool>();
    st.a_over_r_support_ok = js.at("a_over_r_support_ok").get<bool>();
    st.ramif_s_over_r = js.at("ramif_s_over_r").get<std::vector<std::string>>();
    st.ramif_s_over_a_over_r = js.at("ramif_s_over_a_over_r").get<std::vector<std::string>>();
    st.ramif_a_over_r_generators =
        js.at("ramif_a_over_r_generators").get<std::vector<std::string>>();
    st.ramif_generator_invariant = js.at("ramif_generator_invariant").get<std::vector<bool>>();
    st.is_split = js.at("is_split").get<bool>();
    st.deg_different = js.at("deg_different").get<std::uint64_t>();
    st.witness_trace = js.at("witness_trace").get<std::string>();
    st.split_scalar = js.at("split_scalar").get<std::string>();
    st.closed_forms = js.at("closed_forms").get<std::string>();
    st.orbit_witness = js.at("orbit_witness").get<std::string>();
    st.orbit_trace_tests = js.at("orbit_trace_tests").get<std::size_t>();
    r.stages.push_back(std::move(st));
  }
  r.overall = j.at("overall").get<std::string>();
  return r;
}

// ---- human format -----------------------------------------------------------

namespace detail {

inline std::string cert_line(const DifferentReport& d) {
  if (d.factors.empty()) return "1";
  std::string out;
  for (const auto& [l, e] : d.factors) {
    if (!out.empty()) out += " * ";
    out += "(" + l + ")^" + std::to_string(e);
  }
  return out;
}

}  // namespace detail

inline std::string emit_human(const AnalysisReport& r) {
  std::string o;
  auto line = [&](const std::string& s) { o += s + "\n"; };
  line("== invariant-ring ramification report (schema " + std::to_string(r.schema_version) + ") ==");
  if (r.overall != "ok")
    line("*** WARNING: partial results; some computations hit a configured cap ***");
  {
    std::string m;
    for (std::size_t i = 0; i < r.modulus.size(); ++i)
      m += (i ? "," : "") + std::to_string(r.modulus[i]);
    line("field: GF(" + std::to_string(r.p) + "^" + std::to_string(r.k) + "), modulus [" + m + "]");
  }
  {
    std::string v;
    for (const auto& name : r.vars) v += (v.empty() ? "" : " ") + name;
    line("vars: " + v);
  }
  for (const auto& [name, val] : r.bindings) line("bind " + name + " = " + val);
  line("");
  line("group order " + std::to_string(r.group_order) +
       (r.group_beta ? ", beta = " + std::to_string(*r.group_beta) : "") +
       (r.transvection_generated ? "" : "  (not generated by transvections)"));
  line("pseudo-reflections (" + std::to_string(r.reflections.size()) + "):");
  for (const auto& row : r.reflections)
    line("  beta=" + std::to_string(row.beta) + "  line " + row.line + "  [" + row.element + "]");
  if (!r.series.empty()) {
    line("");
    line("composition series:");
    std::size_t i = 1;
    for (const auto& s : r.series)
      line("  G" + std::to_string(i++) + ": order " + std::to_string(s.order) + ", witness [" +
           s.witness + "], beta " + std::to_string(s.beta));
  }
  if (!r.rings.empty()) {
    line("");
    line("invariant rings:");
    for (const auto& ring : r.rings) {
      std::string ds;
      for (auto d : ring.degrees) ds += (ds.empty() ? "" : ",") + std::to_string(d);
      line("  " + ring.name + " (group order " + std::to_string(ring.group_order) +
           "): degrees {" + ds + "}" +
           (ring.certified ? ", certified, quotient dimension " +
                                 std::to_string(*ring.quotient_dimension)
                           : ", UNCERTIFIED (degree budget)"));
      for (std::size_t gi = 0; gi < ring.generators.size(); ++gi)
        line("    g" + std::to_string(gi + 1) + " = " + ring.generators[gi]);
    }
  }
  for (const auto& st : r.stages) {
    line("");
    line("stage " + (st.index ? std::to_string(st.index) : std::string("(explicit G')")) +
         ": orders " + std::to_string(st.lower_order) + " < " + std::to_string(st.upper_order) +
         ", sigma [" + st.sigma + "]");
    if (st.status != "ok") {
      line("  status: " + st.status);
      continue;
    }
    line(std::string("  standing beta hypothesis: ") + (st.standing_beta_ok ? "holds" : "fails"));
    line("  Delta(S/R) = " + detail::cert_line(st.different_s_over_r));
    line("  Delta(S/A) = " + detail::cert_line(st.different_s_over_a));
    line("  Delta(A/R) = " + detail::cert_line(st.different_a_over_r));
    line("    expanded: " + st.different_a_over_r.expanded);
    line(std::string("    G-invariant: ") + (st.a_over_r_g_invariant ? "yes" : "NO") +
         std::string(", support matches outside reflections: ") +
         (st.a_over_r_support_ok ? "yes" : "NO"));
    {
      std::string s1, s2;
      for (const auto& l : st.ramif_s_over_r) s1 += (s1.empty() ? "" : ", ") + l;
      for (const auto& l : st.ramif_s_over_a_over_r) s2 += (s2.empty() ? "" : ", ") + l;
      line("  Ramif1(S/R) lines: {" + s1 + "}");
      line("  Ramif1(S/A/R) lines: {" + s2 + "}");
      for (std::size_t i = 0; i < st.ramif_a_over_r_generators.size(); ++i)
        line("  Ramif1(A/R) generator: " + st.ramif_a_over_r_generators[i] +
             (st.ramif_generator_invariant[i] ? "  (G-invariant)" : "  (NOT G-invariant)"));
    }
    line("  d_min = " + std::to_string(st.d_min) + ", witness a = " + st.witness);
    line("  trace(a^(p-1)) = " + st.witness_trace);
    line(std::string("  split: ") + (st.is_split ? "YES" : "no") + " (deg Delta = " +
         std::to_string(st.deg_different) + ", (p-1)*d_min = bound" +
         (st.is_split ? ", trace = " + st.split_scalar + " * Delta" : "") + ")");
    line("  closed forms: " + st.closed_forms);
    line("  linear orbit witness: " + st.orbit_witness +
         " (trace tests: " + std::to_string(st.orbit_trace_tests) + ")");
  }
  line("");
  line("overall: " + r.overall);
  return o;
}

inline std::string emit(const AnalysisReport& r, const std::string& format) {
  if (format == "human") return emit_human(r);
  if (format == "machine") return emit_machine(r);
  throw SpecError("unknown report format '" + format + "' (use human or machine)");
}

}  // namespace tvg
