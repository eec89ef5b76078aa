#pragma once

// Finite unitriangular groups acting on the polynomial ring by degree
// preserving substitutions. Elements are given by their images on the
// variables; the normal form requires g(x_1) = x_1 and g(x_i) - x_i to be
// supported on x_1..x_{i-1}, which forces p-power order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tvg/poly.hpp"

namespace tvg {

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(const Field& f, std::vector<LinearForm> images)
      : field_(&f), images_(std::move(images)) {}

  static GroupElement identity(const Field& f, std::uint32_t n) {
    std::vector<LinearForm> imgs;
    for (std::uint32_t i = 0; i < n; ++i) {
      LinearForm l = LinearForm::zero(f, n);
      l.coeffs[i] = f.one();
      imgs.push_back(l);
    }
    return GroupElement(f, std::move(imgs));
  }

  const Field& field() const { return *field_; }
  std::uint32_t nvars() const { return static_cast<std::uint32_t>(images_.size()); }
  const LinearForm& image(std::uint32_t i) const { return images_[i]; }
  const std::vector<LinearForm>& images() const { return images_; }

  bool is_identity() const {
    for (std::uint32_t i = 0; i < nvars(); ++i) {
      for (std::uint32_t j = 0; j < nvars(); ++j) {
        FieldElem want = (i == j) ? field_->one() : field_->zero();
        if (images_[i].coeffs[j] != want) return false;
      }
    }
    return true;
  }

  bool is_unitriangular() const {
    for (std::uint32_t i = 0; i < nvars(); ++i) {
      if (images_[i].coeffs[i] != field_->one()) return false;
      for (std::uint32_t j = i + 1; j < nvars(); ++j)
        if (!images_[i].coeffs[j].is_zero()) return false;
    }
    return true;
  }

  /// Flat coefficient key; canonical for equality, hashing and ordering.
  std::vector<std::uint32_t> key() const {
    std::vector<std::uint32_t> k;
    k.reserve(nvars() * nvars());
    for (const auto& l : images_)
      for (const auto& c : l.coeffs) k.push_back(c.v);
    return k;
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.field_ == b.field_ && a.images_ == b.images_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.key() < b.key();
  }

 private:
  const Field* field_ = nullptr;
  std::vector<LinearForm> images_;
};

/// Image of a linear form under the substitution.
inline LinearForm act(const GroupElement& g, const LinearForm& l) {
  LinearForm r = LinearForm::zero(g.field(), g.nvars());
  for (std::uint32_t i = 0; i < g.nvars(); ++i) {
    if (l.coeffs[i].is_zero()) continue;
    for (std::uint32_t j = 0; j < g.nvars(); ++j)
      r.coeffs[j] = r.coeffs[j] + l.coeffs[i] * g.image(i).coeffs[j];
  }
  return r;
}

/// Substitution action on polynomials: x_i -> g(x_i).
inline Poly act(const GroupElement& g, const Poly& f) {
  const Field& fld = f.field();
  const std::uint32_t n = f.nvars();
  // cache powers of the variable images as they are needed
  std::vector<std::vector<Poly>> powers(n);
  auto image_pow = [&](std::uint32_t i, std::uint32_t e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(Poly::one(fld, n));
      cache.push_back(g.image(i).to_poly());
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  Poly r(fld, n);
  for (const auto& [m, c] : f.terms()) {
    Poly term = Poly::constant(fld, n, c);
    for (std::uint32_t i = 0; i < n; ++i)
      if (m.e[i]) term = term * image_pow(i, m.e[i]);
    r += term;
  }
  return r;
}

/// (g o h)(x_i) = g applied to h(x_i); act(g o h, f) = act(g, act(h, f)).
inline GroupElement compose(const GroupElement& g, const GroupElement& h) {
  if (&g.field() != &h.field() || g.nvars() != h.nvars())
    throw Error("group elements from mismatched ambient data");
  std::vector<LinearForm> imgs;
  imgs.reserve(g.nvars());
  for (std::uint32_t i = 0; i < g.nvars(); ++i) imgs.push_back(act(g, h.image(i)));
  return GroupElement(g.field(), std::move(imgs));
}

inline GroupElement inverse(const GroupElement& g) {
  // With row i listing the coefficients of g(x_i), the matrix is lower
  // unitriangular; invert by forward substitution.
  const Field& f = g.field();
  const std::uint32_t n = g.nvars();
  std::vector<LinearForm> inv(n, LinearForm::zero(f, n));
  for (std::uint32_t i = 0; i < n; ++i) {
    // solve sum_j inv[i].coeffs[j] * g(x_j) = x_i by eliminating from the
    // top index down (g(x_j) = x_j + lower terms)
    LinearForm target = LinearForm::zero(f, n);
    target.coeffs[i] = f.one();
    for (std::uint32_t j = i + 1; j-- > 0;) {
      FieldElem c = target.coeffs[j];
      inv[i].coeffs[j] = c;
      if (c.is_zero()) continue;
      for (std::uint32_t t = 0; t < n; ++t)
        target.coeffs[t] = target.coeffs[t] - c * g.image(j).coeffs[t];
    }
    if (!target.is_zero()) throw Error("group element is not invertible");
  }
  return GroupElement(f, std::move(inv));
}

struct TransvectionInfo {
  GroupElement element;
  std::uint32_t beta = 0;       // largest variable index moved into
  LinearForm line;              // normalized reflecting line, pivot = beta
};

/// True when rank(g - 1) on degree-one forms is exactly 1.
inline bool is_pseudo_reflection(const GroupElement& g) {
  std::optional<LinearForm> line;
  bool nonzero = false;
  for (std::uint32_t i = 0; i < g.nvars(); ++i) {
    LinearForm d = g.image(i);
    d.coeffs[i] = d.coeffs[i] - g.field().one();
    if (d.is_zero()) continue;
    nonzero = true;
    if (!line)
      line = d.normalized();
    else if (!proportional(*line, d))
      return false;
  }
  return nonzero;
}

inline TransvectionInfo transvection_info(const GroupElement& g) {
  if (g.is_identity()) throw Error("identity element has no reflecting line");
  std::optional<LinearForm> line;
  for (std::uint32_t i = 0; i < g.nvars(); ++i) {
    LinearForm d = g.image(i);
    d.coeffs[i] = d.coeffs[i] - g.field().one();
    if (d.is_zero()) continue;
    if (!line)
      line = d.normalized();
    else if (!proportional(*line, d))
      throw Error("element is not a pseudo-reflection");
  }
  TransvectionInfo info;
  info.element = g;
  info.line = *line;
  info.beta = info.line.pivot();
  return info;
}

class Group {
 public:
  /// Breadth-first closure of the generators. Every generator must be in the
  /// unitriangular normal form; the closure is capped.
  static Group enumerate(const Field& f, std::uint32_t nvars,
                         std::vector<GroupElement> generators,
                         std::size_t order_cap = kDefaultOrderCap) {
    for (const auto& g : generators) {
      if (&g.field() != &f || g.nvars() != nvars)
        throw Error("generator from mismatched ambient data");
      if (!g.is_unitriangular())
        throw SpecError(
            "generator is not unitriangular: the first variable must be fixed and "
            "each image may only add earlier variables");
    }
    Group grp;
    grp.field_ = &f;
    grp.nvars_ = nvars;
    grp.generators_ = generators;

    std::map<std::vector<std::uint32_t>, GroupElement> seen;
    std::vector<GroupElement> todo;
    GroupElement id = GroupElement::identity(f, nvars);
    seen.emplace(id.key(), id);
    todo.push_back(id);
    while (!todo.empty()) {
      GroupElement cur = todo.back();
      todo.pop_back();
      for (const auto& g : generators) {
        GroupElement next = compose(cur, g);
        auto k = next.key();
        if (seen.emplace(k, next).second) {
          if (seen.size() > order_cap)
            throw CapError("group order cap (" + std::to_string(order_cap) + ") exceeded");
          todo.push_back(next);
        }
      }
    }
    grp.elements_.reserve(seen.size());
    for (auto& [k, e] : seen) grp.elements_.push_back(e);
    // deterministic order and a p-power sanity check
    std::size_t order = grp.elements_.size();
    while (order % f.p() == 0) order /= f.p();
    if (order != 1) throw Error("enumerated group order is not a power of p");
    for (const auto& e : grp.elements_)
      if (!e.is_identity() && is_pseudo_reflection(e))
        grp.pseudo_reflections_.push_back(transvection_info(e));
    return grp;
  }

  static Group trivial(const Field& f, std::uint32_t nvars) {
    return enumerate(f, nvars, {});
  }

  const Field& field() const { return *field_; }
  std::uint32_t nvars() const { return nvars_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const std::vector<TransvectionInfo>& pseudo_reflections() const { return pseudo_reflections_; }

  bool contains(const GroupElement& g) const {
    auto k = g.key();
    return std::binary_search(elements_.begin(), elements_.end(), g,
                              [](const GroupElement& a, const GroupElement& b) { return a < b; });
  }

  bool same_elements(const Group& o) const {
    if (order() != o.order()) return false;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (!(elements_[i] == o.elements_[i])) return false;
    return true;
  }

  /// Distinct normalized reflecting lines, deterministically ordered.
  std::vector<LinearForm> reflection_lines() const {
    std::vector<LinearForm> lines;
    for (const auto& info : pseudo_reflections_) lines.push_back(info.line);
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    return lines;
  }

  bool is_transvection_generated() const {
    if (order() == 1) return true;
    std::vector<GroupElement> gens;
    for (const auto& info : pseudo_reflections_) gens.push_back(info.element);
    Group h = enumerate(*field_, nvars_, gens, order());
    return h.order() == order();
  }

  std::string key() const {
    std::string s;
    for (const auto& e : elements_)
      for (auto v : e.key()) s += std::to_string(v) + ",";
    return s;
  }

  static constexpr std::size_t kDefaultOrderCap = 4096;

 private:
  const Field* field_ = nullptr;
  std::uint32_t nvars_ = 0;
  std::vector<GroupElement> elements_;      // sorted by key
  std::vector<GroupElement> generators_;
  std::vector<TransvectionInfo> pseudo_reflections_;
};

/// Largest beta over the pseudo-reflections. Errors when there are none.
inline std::uint32_t beta_of_group(const Group& g) {
  if (g.pseudo_reflections().empty())
    throw Error("group has no pseudo-reflections");
  std::uint32_t b = 0;
  for (const auto& info : g.pseudo_reflections()) b = std::max(b, info.beta);
  return b;
}

/// beta as a signed value, with -1 for groups without pseudo-reflections
/// (the trivial group in particular) so it compares below every real beta.
inline std::int64_t beta_or_sentinel(const Group& g) {
  return g.pseudo_reflections().empty() ? -1 : static_cast<std::int64_t>(beta_of_group(g));
}

inline Group subgroup(const Group& g, const std::vector<GroupElement>& gens,
                      std::size_t order_cap = Group::kDefaultOrderCap) {
  for (const auto& e : gens)
    if (!g.contains(e)) throw Error("subgroup generator outside the ambient group");
  return Group::enumerate(g.field(), g.nvars(), gens, order_cap);
}

inline bool is_normal(const Group& n, const Group& g) {
  for (const auto& gen : g.generators()) {
    GroupElement gi = inverse(gen);
    for (const auto& x : n.elements()) {
      GroupElement conj = compose(compose(gen, x), gi);
      if (!n.contains(conj)) return false;
    }
  }
  return true;
}

struct CompositionSeries {
  std::vector<Group> chain;            // chain[0] trivial, chain.back() = G
  std::vector<GroupElement> witnesses; // witnesses[i] generates chain[i+1]/chain[i]
};

namespace detail {

inline bool series_search(const Group& g, const std::vector<TransvectionInfo>& all_trans,
                          CompositionSeries& out) {
  const Group& cur = out.chain.back();
  if (cur.order() == g.order()) return true;
  // candidates in ascending (beta, key) order; ties broken canonically
  for (const auto& cand : all_trans) {
    if (cur.contains(cand.element)) continue;
    std::vector<GroupElement> gens = cur.generators();
    gens.push_back(cand.element);
    Group next = Group::enumerate(g.field(), g.nvars(), gens, g.order());
    if (next.order() != cur.order() * g.field().p()) continue;
    if (!is_normal(cur, next)) continue;
    if (beta_or_sentinel(next) < beta_or_sentinel(cur)) continue;
    out.chain.push_back(next);
    out.witnesses.push_back(cand.element);
    if (series_search(g, all_trans, out)) return true;
    out.chain.pop_back();
    out.witnesses.pop_back();
  }
  return false;
}

}  // namespace detail

/// Chain of transvection subgroups with Z/p quotients generated by
/// transvection classes and non-decreasing beta. Greedy over ascending beta
/// with backtracking; the separate validator re-checks the result.
inline CompositionSeries composition_series(const Group& g) {
  if (!g.is_transvection_generated())
    throw Error("group is not generated by its transvections");
  CompositionSeries series;
  series.chain.push_back(Group::trivial(g.field(), g.nvars()));
  if (g.order() == 1) return series;
  std::vector<TransvectionInfo> cands = g.pseudo_reflections();
  std::sort(cands.begin(), cands.end(), [](const TransvectionInfo& a, const TransvectionInfo& b) {
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.element.key() < b.element.key();
  });
  if (!detail::series_search(g, cands, series))
    throw Error("no composition series found");  // contradicts the theory; a bug signal
  return series;
}

/// Independent re-check of every invariant of a composition series.
inline bool validate_series(const Group& g, const CompositionSeries& s, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (s.chain.empty() || s.chain.front().order() != 1) return fail("chain must start trivial");
  if (!s.chain.back().same_elements(g)) return fail("chain must end at the full group");
  if (s.witnesses.size() + 1 != s.chain.size()) return fail("one witness per step required");
  for (std::size_t i = 1; i < s.chain.size(); ++i) {
    const Group& lo = s.chain[i - 1];
    const Group& hi = s.chain[i];
    if (hi.order() != lo.order() * g.field().p()) return fail("step is not of index p");
    for (const auto& e : lo.elements())
      if (!hi.contains(e)) return fail("chain is not nested");
    if (!is_normal(lo, hi)) return fail("lower group is not normal in the next");
    if (!hi.is_transvection_generated()) return fail("chain group is not a transvection group");
    if (beta_or_sentinel(hi) < beta_or_sentinel(lo)) return fail("beta must be non-decreasing");
    const GroupElement& w = s.witnesses[i - 1];
    if (!is_pseudo_reflection(w)) return fail("witness is not a transvection");
    if (!hi.contains(w) || lo.contains(w)) return fail("witness must generate the quotient");
  }
  return true;
}

/// Penultimate subgroup and the transvection generating the last quotient.
inline std::pair<Group, GroupElement> last_step_data(const CompositionSeries& s) {
  if (s.chain.size() < 2) throw Error("trivial group has no last step");
  return {s.chain[s.chain.size() - 2], s.witnesses.back()};
}

/// Subgroup of gp generated by the transvections fixing every variable
/// except x_var.
inline Group subgroup_fixing_all_but(const Group& gp, std::uint32_t var) {
  std::vector<GroupElement> gens;
  for (const auto& info : gp.pseudo_reflections()) {
    bool ok = true;
    for (std::uint32_t i = 0; i < gp.nvars() && ok; ++i) {
      if (i == var) continue;
      LinearForm d = info.element.image(i);
      d.coeffs[i] = d.coeffs[i] - gp.field().one();
      if (!d.is_zero()) ok = false;
    }
    if (ok) gens.push_back(info.element);
  }
  return Group::enumerate(gp.field(), gp.nvars(), gens, gp.order());
}

/// Stabilizer of a linear form (exact equality, not up to scalar).
inline Group stabilizer_of_form(const Group& gp, const LinearForm& l) {
  std::vector<GroupElement> members;
  for (const auto& e : gp.elements())
    if (act(e, l) == l) members.push_back(e);
  return Group::enumerate(gp.field(), gp.nvars(), members, gp.order());
}

/// Writes a transvection tau outside gp as sigma^k g with g in gp fixing
/// every variable except the one sigma moves into last. Verified by
/// recomposition; failure signals an upstream bug.
struct OutsideFactorization {
  unsigned k = 0;
  GroupElement g;
};

/// Variable indices whose image differs from the variable itself.
inline std::vector<std::uint32_t> moved_variables(const GroupElement& g) {
  std::vector<std::uint32_t> moved;
  for (std::uint32_t i = 0; i < g.nvars(); ++i) {
    LinearForm d = g.image(i);
    d.coeffs[i] = d.coeffs[i] - g.field().one();
    if (!d.is_zero()) moved.push_back(i);
  }
  return moved;
}

inline OutsideFactorization factor_outside_transvection(const GroupElement& tau,
                                                        const GroupElement& sigma,
                                                        const Group& gp) {
  if (!is_pseudo_reflection(tau)) throw Error("element to factor is not a transvection");
  auto sigma_moved = moved_variables(sigma);
  if (sigma_moved.empty()) throw Error("sigma is the identity");
  const std::uint32_t var = sigma_moved.back();
  const unsigned p = tau.field().p();
  GroupElement sigma_inv = inverse(sigma);
  GroupElement left = tau;
  for (unsigned k = 1; k < p; ++k) {
    left = compose(sigma_inv, left);  // sigma^{-k} tau
    if (!gp.contains(left)) continue;
    auto moved = moved_variables(left);
    if (!(moved.empty() || (moved.size() == 1 && moved[0] == var))) continue;
    GroupElement recomposed = left;
    for (unsigned i = 0; i < k; ++i) recomposed = compose(sigma, recomposed);
    if (recomposed == tau) return {k, left};
  }
  throw Error("no factorization tau = sigma^k g found");
}

}  // namespace tvg
