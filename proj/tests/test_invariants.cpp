#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>

#include "support.hpp"
#include "tvg/invariants.hpp"

using namespace tvg;
using namespace tvgtest;

namespace {

bool spans_equal(const Field& f, std::uint32_t n, std::uint32_t d,
                 const std::vector<Poly>& a, const std::vector<Poly>& b) {
  detail::DegreeBasis basis(n, d);
  EchelonSpace sa(f), sb(f);
  for (const auto& p : a) sa.insert(detail::poly_to_row(p, basis));
  for (const auto& p : b) sb.insert(detail::poly_to_row(p, basis));
  if (sa.rank() != sb.rank()) return false;
  for (const auto& p : a)
    if (!sb.contains(detail::poly_to_row(p, basis))) return false;
  return true;
}

// Brute-force oracle: the invariant space computed against every group
// element rather than just the generators.
std::vector<Poly> invariant_space_oracle(const Group& g, std::uint32_t d) {
  Group full = Group::enumerate(g.field(), g.nvars(), g.elements(), g.order());
  return invariant_space(full, d);
}

bool algebra_membership_at_degree(const Group& g, const GeneratorSet& gs, const Poly& f,
                                  std::uint32_t d) {
  const Field& fld = g.field();
  const std::uint32_t n = g.nvars();
  detail::DegreeBasis basis(n, d);
  EchelonSpace span(fld);
  std::function<void(Poly, std::uint32_t, std::size_t)> rec =
      [&](Poly cur, std::uint32_t deg, std::size_t from) {
        if (deg == d) {
          span.insert(detail::poly_to_row(cur, basis));
          return;
        }
        for (std::size_t i = from; i < gs.gens.size(); ++i) {
          if (deg + gs.degrees[i] > d) continue;
          rec(cur * gs.gens[i], deg + gs.degrees[i], i);
        }
      };
  rec(Poly::one(fld, n), 0, 0);
  return span.contains(detail::poly_to_row(f, basis));
}

}  // namespace

TEST_CASE("invariant spaces in degree one") {
  SWExample sw;
  Poly x1 = Poly::variable(sw.f, 4, 0), x3 = Poly::variable(sw.f, 4, 2);
  auto r1 = invariant_space(sw.G, 1);
  CHECK(spans_equal(sw.f, 4, 1, r1, {x1, x3}));
  CHECK(spans_equal(sw.f, 4, 1, r1, invariant_space_oracle(sw.G, 1)));

  // the subgroup generated by tau1, tau2 in the main example has a
  // two-dimensional fixed space in degree one
  MainExample ex(2);
  Group c = Group::enumerate(ex.f, 4, {ex.tau1, ex.tau2});
  CHECK(invariant_space(c, 1).size() == 2);

  // trivial group: everything
  CHECK(invariant_space(Group::trivial(sw.f, 4), 2).size() == 10);
}

TEST_CASE("invariant spaces agree with the all-elements oracle") {
  for (unsigned p : {2u, 3u}) {
    MainExample ex(p);
    for (std::uint32_t d = 1; d <= p + 1; ++d) {
      auto a = invariant_space(ex.Gp, d);
      auto b = invariant_space_oracle(ex.Gp, d);
      CHECK(spans_equal(ex.f, 4, d, a, b));
    }
  }
}

TEST_CASE("minimal degree with a non-invariant and its canonical witness") {
  SWExample sw;
  auto md = min_degree_noninvariant(sw.Gp, sw.G);
  CHECK(md.degree == 1);
  CHECK(md.witness == Poly::variable(sw.f, 4, 3));  // x4

  // subgroup generated by sigma*tau: smallest difference in degree 2,
  // witness x4*x1 + x3*x2
  Group h = Group::enumerate(sw.f, 4, {compose(sw.sigma, sw.tau)});
  auto md2 = min_degree_noninvariant(h, sw.G);
  CHECK(md2.degree == 2);
  Poly x1 = Poly::variable(sw.f, 4, 0), x2 = Poly::variable(sw.f, 4, 1);
  Poly x3 = Poly::variable(sw.f, 4, 2), x4 = Poly::variable(sw.f, 4, 3);
  CHECK(md2.witness == x4 * x1 + x3 * x2);

  for (unsigned p : {2u, 3u}) {
    MainExample ex(p);
    auto md3 = min_degree_noninvariant(ex.Gp, ex.G);
    CHECK(md3.degree == p);
  }

  // cap error when the groups have equal invariants
  CHECK_THROWS_AS(min_degree_noninvariant(sw.G, sw.G, 4), CapError);
}

TEST_CASE("orbit products") {
  SWExample sw;
  Poly x1 = Poly::variable(sw.f, 4, 0), x2 = Poly::variable(sw.f, 4, 1);
  CHECK(orbit_product(sw.Gp, x2) == x2 * x2 + x1 * x2);
  CHECK(orbit_product(sw.Gp, x1) == x1);

  for (unsigned p : {2u, 3u}) {
    MainExample ex(p);
    Poly y = Poly::variable(ex.f, 4, 3);
    Poly prod = orbit_product(ex.Gp, y);
    CHECK(prod.degree() == p * p);
    // oracle: the orbit is y + (m + k*beta) x1 over m, k in GF(p)
    Poly expect = Poly::one(ex.f, 4);
    Poly x1m = Poly::variable(ex.f, 4, 0);
    for (unsigned m = 0; m < p; ++m)
      for (unsigned k = 0; k < p; ++k) {
        FieldElem c = ex.f.add(ex.f.from_int(m), ex.f.mul(ex.f.from_int(k), ex.beta));
        expect = expect * (y + x1m.scaled(c));
      }
    CHECK(prod == expect);
  }

  // orbit product intertwines the bigger group action for normal subgroups
  MainExample ex(2);
  Poly s = Poly::variable(ex.f, 4, 3) + Poly::variable(ex.f, 4, 1);
  CHECK(act(ex.sigma, orbit_product(ex.Gp, s)) == orbit_product(ex.Gp, act(ex.sigma, s)));
}

TEST_CASE("trace over the degree-p quotient") {
  SWExample sw;
  Poly x3 = Poly::variable(sw.f, 4, 2), x4 = Poly::variable(sw.f, 4, 3);
  CHECK(trace_over_quotient(sw.Gp, sw.sigma, x4) == x3);
  CHECK(trace_over_quotient(sw.Gp, sw.sigma, Poly::one(sw.f, 4)).is_zero());

  // inputs that are not invariant under the subgroup are rejected
  Poly x2 = Poly::variable(sw.f, 4, 1);
  CHECK_THROWS_AS(trace_over_quotient(sw.Gp, sw.sigma, x2), Error);

  // trace identities for the canonical minimal-degree element
  for (unsigned p : {2u, 3u}) {
    MainExample ex(p);
    auto md = min_degree_noninvariant(ex.Gp, ex.G);
    const Poly& a = md.witness;
    Poly r = act(ex.sigma, a) - a;
    for (const auto& gen : ex.G.generators()) CHECK(act(gen, r) == r);
    for (unsigned j = 0; j + 1 < p; ++j)
      CHECK(trace_over_quotient(ex.Gp, ex.sigma, a.pow(j)).is_zero());
    CHECK(trace_over_quotient(ex.Gp, ex.sigma, a.pow(p - 1)) == -(r.pow(p - 1)));
  }
}

TEST_CASE("minimal generators with quotient-dimension certification") {
  SWExample sw;
  GeneratorSet a = minimal_generators(sw.Gp, 8);
  CHECK(a.certified_complete);
  CHECK(a.quotient_dimension == 2);
  {
    auto ds = a.degrees;
    std::sort(ds.begin(), ds.end());
    CHECK(ds == std::vector<std::uint32_t>{1, 1, 1, 2});
  }

  GeneratorSet r = minimal_generators(sw.G, 8);
  CHECK(r.certified_complete);
  CHECK(r.quotient_dimension == 4);
  {
    auto ds = r.degrees;
    std::sort(ds.begin(), ds.end());
    CHECK(ds == std::vector<std::uint32_t>{1, 1, 2, 2});
  }
  // the known generators lie in the computed algebra
  Poly x1 = Poly::variable(sw.f, 4, 0), x2 = Poly::variable(sw.f, 4, 1);
  Poly x3 = Poly::variable(sw.f, 4, 2), x4 = Poly::variable(sw.f, 4, 3);
  CHECK(algebra_membership_at_degree(sw.G, r, x2 * x2 + x2 * x1, 2));
  CHECK(algebra_membership_at_degree(sw.G, r, x4 * x4 + x4 * x3, 2));

  GeneratorSet t = minimal_generators(Group::trivial(sw.f, 4), 4);
  CHECK(t.certified_complete);
  CHECK(t.quotient_dimension == 1);
  CHECK(t.degrees == std::vector<std::uint32_t>{1, 1, 1, 1});

  // budget exhaustion: uncertified partial set
  GeneratorSet partial = minimal_generators(sw.G, 1);
  CHECK_FALSE(partial.certified_complete);
  CHECK(partial.gens.size() == 2);
}

TEST_CASE("Stong invariant ring recovered") {
  for (unsigned p : {2u, 3u}) {
    StongExample st(p);
    Group gp = Group::enumerate(st.f, 3, {st.rho, st.tau});
    GeneratorSet a = minimal_generators(gp, 2 * p);
    REQUIRE(a.certified_complete);
    auto ds = a.degrees;
    std::sort(ds.begin(), ds.end());
    CHECK(ds == std::vector<std::uint32_t>{1, p, p});
    Poly x = Poly::variable(st.f, 3, 0), y = Poly::variable(st.f, 3, 1),
         z = Poly::variable(st.f, 3, 2);
    Poly n2 = y.pow(p) - y * x.pow(p - 1);
    Poly n3 = z.pow(p) - z * x.pow(p - 1);
    CHECK(std::count(a.gens.begin(), a.gens.end(), x) == 1);
    CHECK(std::count(a.gens.begin(), a.gens.end(), n2) == 1);
    CHECK(std::count(a.gens.begin(), a.gens.end(), n3) == 1);
  }
}

TEST_CASE("inertia ring degrees") {
  // a single transvection: n-1 ones and one p
  for (unsigned p : {2u, 3u}) {
    MainExample ex(p);
    Group s = Group::enumerate(ex.f, 4, {ex.sigma});
    CHECK(inertia_ring_degrees(s) == std::vector<std::uint32_t>{1, 1, 1, p});
  }
  SWExample sw;
  CHECK(inertia_ring_degrees(sw.Gp) == std::vector<std::uint32_t>{1, 1, 1, 2});
  CHECK(inertia_ring_degrees(Group::trivial(sw.f, 4)) ==
        std::vector<std::uint32_t>{1, 1, 1, 1});
}

TEST_CASE("degree-p piece of the main example reduces to the closed form") {
  // every invariant of the smaller group in degree p differs from the
  // closed-form element by something in k[x1, x3]
  for (unsigned p : {2u, 3u}) {
    MainExample ex(p);
    const Field& f = ex.f;
    Poly x1 = Poly::variable(f, 4, 0), x2 = Poly::variable(f, 4, 1),
         x3 = Poly::variable(f, 4, 2), y = Poly::variable(f, 4, 3);
    FieldElem denom = f.zero();
    for (unsigned i = 1; i < p; ++i) denom = denom + f.pow(ex.alpha, i);
    FieldElem lambda = (f.pow(ex.beta, p - 1) - f.one()) / denom;
    FieldElem mu = (f.one() + denom) * lambda;
    Poly a = y.pow(p) - x1.pow(p - 1).scaled(f.pow(ex.beta, p - 1)) * y -
             x2.pow(p).scaled(lambda) + (x1.pow(p - 1) * x2).scaled(mu);
    for (const auto& gen : ex.Gp.generators()) CHECK(act(gen, a) == a);
    Poly diff = act(ex.sigma, a) - a;
    CHECK(diff == x3.pow(p) - (x1.pow(p - 1) * x3).scaled(f.pow(ex.beta, p - 1)));

    auto ap = invariant_space(ex.Gp, p);
    Monomial yp{std::vector<std::uint32_t>{0, 0, 0, p}};
    for (const auto& s : ap) {
      Poly rest = s - a.scaled(s.coeff(yp));
      for (const auto& [m, c] : rest.terms()) {
        CHECK(m.e[1] == 0);  // no x2
        CHECK(m.e[3] == 0);  // no y
      }
    }
    // and the canonical minimal witness is exactly a
    auto md = min_degree_noninvariant(ex.Gp, ex.G);
    CHECK(md.degree == p);
    CHECK(md.witness == a);
  }
}

TEST_CASE("orbit products of non-fixed linear forms escape the big invariant ring") {
  MainExample ex(2);
  auto md = min_degree_noninvariant(ex.Gp, ex.G);
  for (const Poly& s : {Poly::variable(ex.f, 4, 3),
                        Poly::variable(ex.f, 4, 3) + Poly::variable(ex.f, 4, 1)}) {
    Poly prod = orbit_product(ex.Gp, s);
    for (const auto& gen : ex.Gp.generators()) CHECK(act(gen, prod) == prod);
    CHECK(act(ex.sigma, prod) != prod);
    CHECK(prod.degree() >= md.degree);
  }
}
