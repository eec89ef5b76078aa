#pragma once

// Graded invariant-ring computations: invariant subspaces degree by degree,
// minimal-degree non-invariant witnesses, orbit products, trace maps over a
// degree-p quotient, and minimal generating sets certified by the quotient
// dimension dim_k S/(gens) = |G|.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tvg/group.hpp"
#include "tvg/linalg.hpp"

namespace tvg {

/// Monomials of total degree d in n variables, leading-first.
inline std::vector<Monomial> monomial_basis(std::uint32_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  // enumerate all compositions, then sort canonically
  e[0] = d;
  while (true) {
    out.push_back(Monomial{e});
    std::uint32_t i = 0;
    while (i < n - 1 && e[i] == 0) ++i;
    if (i == n - 1) break;
    std::uint32_t v = e[i];
    e[i] = 0;
    e[0] = v - 1;
    e[i + 1] += 1;
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return MonoOrder{}(a, b);
  });
  return out;
}

namespace detail {

struct DegreeBasis {
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t, MonoOrder> index;

  explicit DegreeBasis(std::uint32_t n, std::uint32_t d) : monomials(monomial_basis(n, d)) {
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  }
  std::size_t size() const { return monomials.size(); }
};

inline Row poly_to_row(const Poly& f, const DegreeBasis& basis) {
  Row r(basis.size(), 0);
  for (const auto& [m, c] : f.terms()) {
    auto it = basis.index.find(m);
    if (it == basis.index.end()) throw Error("polynomial does not lie in the graded piece");
    r[it->second] = static_cast<std::uint16_t>(c.v);
  }
  return r;
}

inline Poly row_to_poly(const Field& f, std::uint32_t n, const Row& r, const DegreeBasis& basis) {
  Poly out(f, n);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i]) out.add_term(basis.monomials[i], FieldElem{&f, r[i]});
  return out;
}

}  // namespace detail

/// Canonical basis (reduced echelon, leading-first) of the degree-d piece of
/// the invariant ring: the common kernel of g - 1 over the generators.
inline std::vector<Poly> invariant_space(const Group& g, std::uint32_t d) {
  const Field& f = g.field();
  const std::uint32_t n = g.nvars();
  if (d == 0) return {Poly::one(f, n)};
  detail::DegreeBasis basis(n, d);
  const std::size_t N = basis.size();
  // constraint rows of the stacked maps (gen - 1), one block per generator;
  // entry [(gen, i)][j] is the coefficient of monomial i in (gen - 1) m_j
  std::vector<Row> rows(g.generators().size() * N, Row(N, 0));
  for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
    const auto& gen = g.generators()[gi];
    for (std::size_t j = 0; j < N; ++j) {
      Poly mono(f, n);
      mono.add_term(basis.monomials[j], f.one());
      Poly col = act(gen, mono) - mono;
      for (const auto& [m, c] : col.terms())
        rows[gi * N + basis.index.at(m)][j] = static_cast<std::uint16_t>(c.v);
    }
  }
  std::vector<Row> kern = kernel_basis(f, rows, N);
  std::vector<Poly> out;
  out.reserve(kern.size());
  for (const auto& r : kern) out.push_back(detail::row_to_poly(f, n, r, basis));
  return out;
}

inline std::size_t invariant_dimension(const Group& g, std::uint32_t d) {
  return invariant_space(g, d).size();
}

/// Association degree -> basis of the degree-d invariant piece.
struct GradedBasis {
  std::map<std::uint32_t, std::vector<Poly>> by_degree;
};

struct MinDegreeWitness {
  std::uint32_t degree = 0;
  Poly witness;  // monic, fully reduced against the smaller space
};

/// Smallest d with dim A_d > dim R_d for A = S^{G'}, R = S^G, together with
/// the canonical witness: rows of the reduced echelon basis of A_d are
/// reduced against R_d, and the first nonzero remainder (leading-first),
/// made monic, is returned.
inline MinDegreeWitness min_degree_noninvariant(const Group& gp, const Group& g,
                                                std::uint32_t degree_cap = 0) {
  const Field& f = g.field();
  const std::uint32_t n = g.nvars();
  if (degree_cap == 0)
    degree_cap = static_cast<std::uint32_t>(g.order() * f.p());
  for (std::uint32_t d = 1; d <= degree_cap; ++d) {
    std::vector<Poly> a = invariant_space(gp, d);
    std::vector<Poly> r = invariant_space(g, d);
    if (a.size() == r.size()) continue;
    detail::DegreeBasis basis(n, d);
    EchelonSpace rsp(f);
    for (const auto& pr : r) rsp.insert(detail::poly_to_row(pr, basis));
    for (const auto& pa : a) {
      Row row = detail::poly_to_row(pa, basis);
      rsp.reduce(row);
      std::size_t piv = 0;
      while (piv < row.size() && !row[piv]) ++piv;
      if (piv == row.size()) continue;
      std::uint16_t inv = f.raw_inv(row[piv]);
      for (auto& v : row) v = f.raw_mul(v, inv);
      return {d, detail::row_to_poly(f, n, row, basis)};
    }
    throw Error("dimension mismatch without a witness");  // unreachable
  }
  throw CapError("no non-invariant element found up to degree " + std::to_string(degree_cap));
}

/// Product over the distinct elements of the G'-orbit of s.
inline Poly orbit_product(const Group& gp, const Poly& s) {
  std::set<std::string> seen;
  Poly prod = Poly::one(s.field(), s.nvars());
  for (const auto& e : gp.elements()) {
    Poly moved = act(e, s);
    std::string key;
    for (const auto& [m, c] : moved.terms()) {
      for (auto x : m.e) key += std::to_string(x) + ".";
      key += ":" + std::to_string(c.v) + ";";
    }
    if (seen.insert(key).second) prod = prod * moved;
  }
  return prod;
}

/// Sum over the p powers of sigma; on G'-invariants this is the trace of
/// the degree-p quotient. The input must be G'-invariant and the result
/// G-invariant; both are checked.
inline Poly trace_over_quotient(const Group& gp, const GroupElement& sigma, const Poly& a) {
  for (const auto& gen : gp.generators())
    if (act(gen, a) != a) throw Error("trace input is not invariant under the subgroup");
  const unsigned p = a.field().p();
  Poly sum = a;
  Poly cur = a;
  for (unsigned i = 1; i < p; ++i) {
    cur = act(sigma, cur);
    sum += cur;
  }
  if (act(sigma, sum) != sum) throw Error("trace output is not invariant");  // bug signal
  for (const auto& gen : gp.generators())
    if (act(gen, sum) != sum) throw Error("trace output is not invariant");
  return sum;
}

struct GeneratorSet {
  std::vector<Poly> gens;                  // homogeneous, monic, canonical order
  std::vector<std::uint32_t> degrees;      // parallel to gens
  bool certified_complete = false;
  std::optional<std::uint64_t> quotient_dimension;  // dim_k S/(gens) when known finite
};

namespace detail {

/// dim_k S/(f_1..f_m) for n homogeneous generators, or nullopt when the
/// quotient is not finite-dimensional (detected at the complete-intersection
/// socle bound). Degree-by-degree exact rank computation using
/// I_d = S_1 * I_{d-1} + <generators of degree d>.
inline std::optional<std::uint64_t> quotient_dimension(const Field& f, std::uint32_t n,
                                                       const std::vector<Poly>& gens) {
  if (gens.size() != n) return std::nullopt;
  std::uint64_t socle = 0;
  for (const auto& g : gens) {
    if (g.is_zero() || !g.is_homogeneous()) throw Error("generators must be nonzero homogeneous");
    socle += g.degree() - 1;
  }
  std::uint64_t total = 1;  // degree 0 contributes k
  std::vector<Poly> prev_ideal_basis;  // canonical rows of I_{d-1} as polys
  for (std::uint32_t d = 1; d <= socle + 1; ++d) {
    DegreeBasis basis(n, d);
    EchelonSpace sp(f);
    for (const auto& b : prev_ideal_basis)
      for (std::uint32_t j = 0; j < n; ++j)
        sp.insert(poly_to_row(b * Poly::variable(f, n, j), basis));
    for (const auto& g : gens)
      if (g.degree() == d) sp.insert(poly_to_row(g, basis));
    std::uint64_t qdim = basis.size() - sp.rank();
    if (d == socle + 1) {
      // a finite quotient on n generators is a complete intersection and
      // vanishes above the socle degree
      if (qdim != 0) return std::nullopt;
      break;
    }
    total += qdim;
    prev_ideal_basis.clear();
    for (const auto& [piv, row] : sp.rows())
      prev_ideal_basis.push_back(row_to_poly(f, n, row, basis));
    if (qdim == 0 && d <= socle) {
      // quotient already vanished; higher degrees stay zero
      return total;
    }
  }
  return total;
}

}  // namespace detail

/// Degree-ascending minimal generators of S^G. At each degree the invariant
/// space is reduced against products of the generators found so far; new
/// basis elements become generators. Certified complete exactly when n
/// generators realize dim_k S/(gens) = |G| (which forces S^G = k[gens]).
inline GeneratorSet minimal_generators(const Group& g, std::uint32_t degree_budget) {
  const Field& f = g.field();
  const std::uint32_t n = g.nvars();
  GeneratorSet out;
  // per-degree echelon of the subalgebra generated so far
  std::map<std::uint32_t, EchelonSpace> algebra;
  std::map<std::uint32_t, detail::DegreeBasis> bases;
  auto basis_at = [&](std::uint32_t d) -> detail::DegreeBasis& {
    auto it = bases.find(d);
    if (it == bases.end()) it = bases.emplace(d, detail::DegreeBasis(n, d)).first;
    return it->second;
  };
  // algebra piece in degree d spanned by products gen_i * (algebra at d - deg_i)
  for (std::uint32_t d = 1; d <= degree_budget; ++d) {
    detail::DegreeBasis& basis = basis_at(d);
    EchelonSpace span(f);
    for (std::size_t gi = 0; gi < out.gens.size(); ++gi) {
      std::uint32_t dg = out.degrees[gi];
      if (dg > d) continue;
      if (dg == d) {
        span.insert(detail::poly_to_row(out.gens[gi], basis));
        continue;
      }
      auto it = algebra.find(d - dg);
      if (it == algebra.end()) continue;
      detail::DegreeBasis& sub = basis_at(d - dg);
      for (const auto& [piv, row] : it->second.rows()) {
        Poly prod = detail::row_to_poly(f, n, row, sub) * out.gens[gi];
        span.insert(detail::poly_to_row(prod, basis));
      }
    }
    for (const auto& inv : invariant_space(g, d)) {
      Row row = detail::poly_to_row(inv, basis);
      span.reduce(row);
      std::size_t piv = 0;
      while (piv < row.size() && !row[piv]) ++piv;
      if (piv == row.size()) continue;
      std::uint16_t ic = f.raw_inv(row[piv]);
      for (auto& v : row) v = f.raw_mul(v, ic);
      out.gens.push_back(detail::row_to_poly(f, n, row, basis));
      out.degrees.push_back(d);
      span.insert(std::move(row));
    }
    algebra.emplace(d, std::move(span));
    if (out.gens.size() == n) {
      auto qd = detail::quotient_dimension(f, n, out.gens);
      if (qd && *qd == g.order()) {
        out.certified_complete = true;
        out.quotient_dimension = qd;
        return out;
      }
    }
    if (out.gens.size() > n) break;  // can never certify a polynomial ring
  }
  if (out.gens.size() >= n) out.quotient_dimension = detail::quotient_dimension(f, n, out.gens);
  return out;
}

/// Degrees d_1..d_n of the generators of S^{G_in} for an inertia group of a
/// linear-form prime; such rings are polynomial, so certification must
/// succeed within degree |G_in|.
inline std::vector<std::uint32_t> inertia_ring_degrees(const Group& g_in) {
  std::uint32_t budget = static_cast<std::uint32_t>(g_in.order());
  GeneratorSet gs = minimal_generators(g_in, budget);
  if (!gs.certified_complete)
    throw CapError("invariant ring of the inertia group did not certify within degree " +
                   std::to_string(budget));
  std::vector<std::uint32_t> ds = gs.degrees;
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace tvg
