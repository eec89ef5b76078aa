#pragma once

// Height-one ramification data for invariant-ring extensions: inertia and
// decomposition groups of linear-form primes, hyperplane exponents, factored
// Dedekind-different certificates, ramification loci, the closed forms
// available when the top transvection reaches strictly further than the
// normal subgroup, the direct-summand verdict, and the exhaustive search for
// linear orbit-product witnesses.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tvg/invariants.hpp"

namespace tvg {

/// Shared memo for inertia-ring degree computations; certificates for one
/// analysis reuse the generator sweeps of repeated subgroups.
class AnalysisContext {
 public:
  const std::vector<std::uint32_t>& degrees_of(const Group& g) {
    auto key = g.key();
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, inertia_ring_degrees(g)).first;
    return it->second;
  }

 private:
  std::map<std::string, std::vector<std::uint32_t>> memo_;
};

/// Subgroup generated by the pseudo-reflections whose line is proportional
/// to l. Coincides with {g | g s - s in lS for all s}.
inline Group inertia_group(const LinearForm& l, const Group& g) {
  if (l.is_zero()) throw Error("inertia group of the zero form");
  LinearForm nl = l.normalized();
  std::vector<GroupElement> gens;
  for (const auto& info : g.pseudo_reflections())
    if (info.line == nl) gens.push_back(info.element);
  return Group::enumerate(g.field(), g.nvars(), gens, g.order());
}

/// Elements mapping the line lS to itself.
inline Group decomposition_group(const LinearForm& l, const Group& g) {
  if (l.is_zero()) throw Error("decomposition group of the zero form");
  std::vector<GroupElement> members;
  for (const auto& e : g.elements())
    if (proportional(act(e, l), l)) members.push_back(e);
  Group dec = Group::enumerate(g.field(), g.nvars(), members, g.order());
  Group in = inertia_group(l, g);
  if (!is_normal(in, dec)) throw Error("inertia group is not normal in the decomposition group");
  return dec;
}

/// Exponent of l in the different of S over S^G: sum (d_i - 1) over the
/// generator degrees of the inertia ring; 0 for trivial inertia.
inline std::uint32_t hyperplane_exponent(const LinearForm& l, const Group& g,
                                         AnalysisContext& ctx) {
  Group in = inertia_group(l, g);
  if (in.order() == 1) return 0;
  std::uint32_t e = 0;
  for (auto d : ctx.degrees_of(in)) e += d - 1;
  return e;
}

/// Factored principal different: pairwise non-proportional normalized linear
/// forms with positive exponents, defined up to a nonzero scalar.
struct DifferentCertificate {
  std::string ring_tag;
  std::vector<std::pair<LinearForm, std::uint32_t>> factors;  // (monic line, exponent)

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& [l, e] : factors) d += e;
    return d;
  }

  Poly expand(const Field& f, std::uint32_t nvars) const {
    Poly r = Poly::one(f, nvars);
    for (const auto& [l, e] : factors) r = r * l.to_poly().pow(e);
    return r;
  }

  friend bool operator==(const DifferentCertificate& a, const DifferentCertificate& b) {
    return a.factors == b.factors;
  }
};

/// Different of S over S^G: one factor per reflecting line.
inline DifferentCertificate different_over_invariants(const Group& g, AnalysisContext& ctx,
                                                      std::string tag = "S/S^G") {
  DifferentCertificate cert;
  cert.ring_tag = std::move(tag);
  for (const auto& l : g.reflection_lines()) {
    std::uint32_t e = hyperplane_exponent(l, g, ctx);
    if (e) cert.factors.emplace_back(l, e);
  }
  return cert;
}

struct RelativeDifferent {
  DifferentCertificate cert;         // different of S^{G'} over S^G
  bool g_invariant = false;          // expanded form fixed by every generator of G
  bool support_matches = false;      // support = lines of reflections outside G'
};

/// Different of A = S^{G'} over R = S^G by factorwise exponent subtraction
/// from the two ambient differents. A negative exponent signals a bug.
inline RelativeDifferent different_of_extension(const Group& g, const Group& gp,
                                                AnalysisContext& ctx) {
  DifferentCertificate top = different_over_invariants(g, ctx, "S/R");
  DifferentCertificate mid = different_over_invariants(gp, ctx, "S/A");
  std::map<LinearForm, std::uint32_t> mid_exp;
  for (const auto& [l, e] : mid.factors) mid_exp[l] = e;
  RelativeDifferent out;
  out.cert.ring_tag = "A/R";
  for (const auto& [l, e] : top.factors) {
    auto it = mid_exp.find(l);
    std::uint32_t sub = (it == mid_exp.end()) ? 0 : it->second;
    if (sub > e) throw Error("negative exponent in the relative different");
    if (e - sub) out.cert.factors.emplace_back(l, e - sub);
  }
  for (const auto& [l, e] : mid.factors)
    if (!std::any_of(top.factors.begin(), top.factors.end(),
                     [&](const auto& f) { return f.first == l; }))
      throw Error("negative exponent in the relative different");

  // support must be the set of reflecting lines outside G'
  std::set<std::vector<std::uint32_t>> expected;
  for (const auto& info : g.pseudo_reflections())
    if (!gp.contains(info.element)) {
      std::vector<std::uint32_t> key;
      for (auto c : info.line.coeffs) key.push_back(c.v);
      expected.insert(key);
    }
  std::set<std::vector<std::uint32_t>> got;
  for (const auto& [l, e] : out.cert.factors) {
    std::vector<std::uint32_t> key;
    for (auto c : l.coeffs) key.push_back(c.v);
    got.insert(key);
  }
  out.support_matches = (expected == got);

  Poly expanded = out.cert.expand(g.field(), g.nvars());
  out.g_invariant = true;
  for (const auto& gen : g.generators())
    if (act(gen, expanded) != expanded) out.g_invariant = false;
  return out;
}

struct ClosedForms {
  DifferentCertificate from_lines;  // product of outside reflecting lines, each to p-1
  Poly from_ppoly;                  // ((sigma - 1)(orbit product of x_var under H))^{p-1}
};

/// The two closed forms for the different of the last stage, available when
/// beta_sigma exceeds beta_{G'} and sigma moves a single variable. Both are
/// checked against each other and against the exponent-subtraction route.
inline ClosedForms different_closed_forms(const Group& g, const Group& gp,
                                          const GroupElement& sigma, AnalysisContext& ctx) {
  if (!is_pseudo_reflection(sigma)) throw Error("sigma must be a transvection");
  std::int64_t bsigma = transvection_info(sigma).beta;
  if (bsigma <= beta_or_sentinel(gp))
    throw Error("closed forms require beta_sigma > beta of the normal subgroup");
  auto moved = moved_variables(sigma);
  if (moved.size() != 1)
    throw Error("closed forms require sigma to move a single variable");
  const std::uint32_t var = moved[0];
  const Field& f = g.field();
  const unsigned p = f.p();

  ClosedForms out;
  out.from_lines.ring_tag = "A/R";
  {
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<LinearForm> lines;
    for (const auto& info : g.pseudo_reflections()) {
      if (gp.contains(info.element)) continue;
      std::vector<std::uint32_t> key;
      for (auto c : info.line.coeffs) key.push_back(c.v);
      if (seen.insert(key).second) lines.push_back(info.line);
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) out.from_lines.factors.emplace_back(l, p - 1);
  }

  Group h = subgroup_fixing_all_but(gp, var);
  Poly pix = orbit_product(h, Poly::variable(f, g.nvars(), var));
  auto dec = p_poly_decompose(pix, var);
  if (!dec) throw Error("orbit product is not a p-polynomial");  // bug signal
  LinearForm l = sigma.image(var);
  l.coeffs[var] = l.coeffs[var] - f.one();  // (sigma - 1) x_var
  out.from_ppoly = apply_sigma_minus_one_to_ppoly(*dec, l).pow(p - 1);

  if (!proportional_scalar(out.from_ppoly, out.from_lines.expand(f, g.nvars())))
    throw Error("closed forms disagree");  // bug signal
  RelativeDifferent rel = different_of_extension(g, gp, ctx);
  if (!proportional_scalar(out.from_ppoly, rel.cert.expand(f, g.nvars())))
    throw Error("closed form disagrees with the exponent route");  // bug signal
  return out;
}

struct Ramif1Report {
  std::vector<LinearForm> s_over_r;                // normalized ramified lines in S over R
  std::vector<LinearForm> s_over_a_over_r;         // those whose trace ramifies in A over R
  std::vector<Poly> a_over_r_generators;           // orbit products, one per line orbit
  std::vector<bool> a_over_r_generator_invariant;  // recorded, not assumed
  bool standing_beta_ok = false;  // every outside reflection reaches at least beta_{G'}
};

inline Ramif1Report ramif1(const Group& g, const Group& gp) {
  Ramif1Report rep;
  rep.s_over_r = g.reflection_lines();
  std::vector<LinearForm> outside;
  {
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& info : g.pseudo_reflections()) {
      if (gp.contains(info.element)) continue;
      std::vector<std::uint32_t> key;
      for (auto c : info.line.coeffs) key.push_back(c.v);
      if (seen.insert(key).second) outside.push_back(info.line);
    }
    std::sort(outside.begin(), outside.end());
  }
  rep.s_over_a_over_r = outside;

  rep.standing_beta_ok = true;
  std::int64_t bgp = beta_or_sentinel(gp);
  for (const auto& info : g.pseudo_reflections())
    if (!gp.contains(info.element) && static_cast<std::int64_t>(info.beta) < bgp)
      rep.standing_beta_ok = false;

  // one generator per G'-orbit of outside lines, represented by the orbit
  // product of the smallest line in the orbit
  std::set<std::vector<std::uint32_t>> used;
  for (const auto& l : outside) {
    std::vector<std::uint32_t> key;
    for (auto c : l.coeffs) key.push_back(c.v);
    if (used.count(key)) continue;
    LinearForm rep_line = l;
    for (const auto& e : gp.elements()) {
      LinearForm moved = act(e, l).normalized();
      std::vector<std::uint32_t> mk;
      for (auto c : moved.coeffs) mk.push_back(c.v);
      used.insert(mk);
      if (moved < rep_line) rep_line = moved;
    }
    Poly gen = orbit_product(gp, rep_line.to_poly());
    bool inv = true;
    for (const auto& ge : g.generators())
      if (act(ge, gen) != gen) inv = false;
    rep.a_over_r_generators.push_back(gen);
    rep.a_over_r_generator_invariant.push_back(inv);
  }
  return rep;
}

struct SplitVerdict {
  bool is_split = false;
  std::uint32_t d_min = 0;
  std::uint64_t deg_different = 0;
  Poly witness;        // canonical minimal-degree element outside the small ring
  Poly witness_trace;  // trace of witness^{p-1}
  std::optional<FieldElem> scalar;  // witness_trace = scalar * expanded different
};

/// Direct-summand verdict for S^G inside S^{G'}, where G' is normal of
/// index p and sigma is a transvection generating the quotient: split
/// exactly when deg different = (p-1) * d_min, witnessed by the trace.
inline SplitVerdict split_test(const Group& g, const Group& gp, const GroupElement& sigma,
                               AnalysisContext& ctx, std::uint32_t degree_cap = 0) {
  if (gp.order() * g.field().p() != g.order())
    throw Error("split test requires an index-p subgroup");
  if (!is_normal(gp, g)) throw Error("split test requires a normal subgroup");
  if (gp.contains(sigma)) throw Error("sigma must lie outside the subgroup");
  if (!is_pseudo_reflection(sigma)) throw Error("sigma must be a transvection");

  SplitVerdict v;
  auto md = min_degree_noninvariant(gp, g, degree_cap);
  v.d_min = md.degree;
  v.witness = md.witness;
  RelativeDifferent rel = different_of_extension(g, gp, ctx);
  v.deg_different = rel.cert.degree();
  const unsigned p = g.field().p();
  v.witness_trace = trace_over_quotient(gp, sigma, md.witness.pow(p - 1));
  std::uint64_t bound = static_cast<std::uint64_t>(p - 1) * v.d_min;
  if (v.deg_different > bound)
    throw Error("different degree exceeds (p-1) * minimal degree");  // bug signal
  v.is_split = (v.deg_different == bound);
  if (v.is_split) {
    auto c = proportional_scalar(v.witness_trace, rel.cert.expand(g.field(), g.nvars()));
    if (!c || c->is_zero())
      throw Error("trace of the minimal witness is not a unit multiple of the different");
    v.scalar = c;
  }
  return v;
}

struct OrbitWitnessOptions {
  std::size_t enumeration_cap = 5000000;  // classes plus fully enumerated candidates
  bool whole_field = false;               // search all scalars, not just the generated subfield
};

struct OrbitWitnessResult {
  bool witness_found = false;
  std::optional<Poly> witness;              // s with trace((prod_{G'} s)^{p-1}) ~ different
  std::size_t classes_scanned = 0;
  std::size_t trace_tests = 0;
  // smallest G'-orbit size seen among candidate classes, per pivot variable
  std::map<std::uint32_t, std::size_t> min_orbit_by_pivot;
};

/// Exhaustive search over pivot-monic linear forms (coefficients restricted
/// to the subfield generated by the group entries unless whole_field) for an
/// s whose orbit-product trace generates the different. Forms fixed by
/// sigma can never qualify and are skipped. Candidates are grouped by their
/// coefficients on the variables G' actually moves: the orbit size, hence
/// the degree test, only depends on those.
inline OrbitWitnessResult search_linear_orbit_witness(const Group& g, const Group& gp,
                                                      const GroupElement& sigma,
                                                      const DifferentCertificate& different,
                                                      const OrbitWitnessOptions& opts = {}) {
  const Field& f = g.field();
  const std::uint32_t n = g.nvars();
  const unsigned p = f.p();
  OrbitWitnessResult res;

  std::uint64_t deg_diff = different.degree();
  // a candidate with orbit size m has trace degree m(p-1)
  std::optional<std::uint64_t> wanted_orbit;
  if (deg_diff % (p - 1) == 0) wanted_orbit = deg_diff / (p - 1);

  std::vector<FieldElem> scalars;
  if (opts.whole_field) {
    for (std::uint32_t v = 0; v < f.size(); ++v) scalars.push_back({&f, v});
  } else {
    std::vector<FieldElem> entries;
    for (const auto& gen : g.generators())
      for (const auto& img : gen.images())
        for (auto c : img.coeffs) entries.push_back(c);
    scalars = f.subfield_generated_by(entries);
  }

  // variables moved by G'
  std::vector<std::uint32_t> moved;
  {
    std::set<std::uint32_t> m;
    for (const auto& gen : gp.generators())
      for (auto i : moved_variables(gen)) m.insert(i);
    moved.assign(m.begin(), m.end());
  }

  Poly diff_poly = different.expand(f, n);

  for (std::uint32_t pivot = 0; pivot < n; ++pivot) {
    std::vector<std::uint32_t> class_vars, free_vars;
    for (std::uint32_t i = 0; i < pivot; ++i) {
      if (std::binary_search(moved.begin(), moved.end(), i))
        class_vars.push_back(i);
      else
        free_vars.push_back(i);
    }
    std::uint64_t nclasses = 1;
    for (std::size_t i = 0; i < class_vars.size(); ++i) {
      nclasses *= scalars.size();
      if (nclasses > opts.enumeration_cap)
        throw CapError("orbit-witness search space too large; raise the cap or restrict the field");
    }
    std::uint64_t nfree = 1;
    for (std::size_t i = 0; i < free_vars.size(); ++i) {
      nfree *= scalars.size();
      if (nfree > opts.enumeration_cap)
        throw CapError("orbit-witness search space too large; raise the cap or restrict the field");
    }

    std::vector<FieldElem> coeffs(n, f.zero());
    for (std::uint64_t ci = 0; ci < nclasses; ++ci) {
      ++res.classes_scanned;
      if (res.classes_scanned > opts.enumeration_cap)
        throw CapError("orbit-witness search space too large; raise the cap or restrict the field");
      std::uint64_t t = ci;
      for (auto i : class_vars) {
        coeffs[i] = scalars[t % scalars.size()];
        t /= scalars.size();
      }
      coeffs[pivot] = f.one();
      // orbit size of this class: distinct values of g(s) - s over g in G'
      std::set<std::vector<std::uint32_t>> deltas;
      for (const auto& e : gp.elements()) {
        LinearForm delta = LinearForm::zero(f, n);
        for (auto i : class_vars) {
          if (coeffs[i].is_zero()) continue;
          LinearForm d = e.image(i);
          d.coeffs[i] = d.coeffs[i] - f.one();
          delta = delta + d.scaled(coeffs[i]);
        }
        LinearForm dp = e.image(pivot);
        dp.coeffs[pivot] = dp.coeffs[pivot] - f.one();
        delta = delta + dp;
        std::vector<std::uint32_t> key;
        for (auto c : delta.coeffs) key.push_back(c.v);
        deltas.insert(key);
      }
      std::size_t orbit = deltas.size();
      auto it = res.min_orbit_by_pivot.find(pivot);
      if (it == res.min_orbit_by_pivot.end() || orbit < it->second)
        res.min_orbit_by_pivot[pivot] = orbit;
      if (!wanted_orbit || orbit != *wanted_orbit) continue;

      // full enumeration of the class: the trace test depends on all the
      // remaining coefficients
      for (std::uint64_t fi = 0; fi < nfree; ++fi) {
        std::uint64_t ft = fi;
        for (auto i : free_vars) {
          coeffs[i] = scalars[ft % scalars.size()];
          ft /= scalars.size();
        }
        LinearForm s{&f, coeffs};
        LinearForm moved_s = act(sigma, s);
        if (moved_s == s) continue;  // sigma-fixed forms never qualify
        ++res.trace_tests;
        if (res.trace_tests > opts.enumeration_cap)
          throw CapError("orbit-witness search space too large; raise the cap or restrict the field");
        Poly prod = orbit_product(gp, s.to_poly());
        Poly tr = trace_over_quotient(gp, sigma, prod.pow(p - 1));
        auto c = proportional_scalar(tr, diff_poly);
        if (c && !c->is_zero()) {
          res.witness_found = true;
          res.witness = s.to_poly();
          return res;
        }
      }
      for (auto i : free_vars) coeffs[i] = f.zero();
    }
    for (auto& c : coeffs) c = f.zero();
  }
  return res;
}

}  // namespace tvg
