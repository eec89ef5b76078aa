#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "tvg/group.hpp"

using namespace tvg;
using namespace tvgtest;

TEST_CASE("compose, inverse and identities") {
  MainExample ex(2);
  GroupElement id = GroupElement::identity(ex.f, ex.n);
  CHECK(compose(ex.tau1, id) == ex.tau1);
  CHECK(compose(id, ex.tau1) == ex.tau1);
  CHECK(compose(ex.tau1, inverse(ex.tau1)) == id);

  // any transvection has order p
  GroupElement pw = ex.tau3;
  for (unsigned i = 1; i < ex.p; ++i) pw = compose(pw, ex.tau3);
  CHECK(pw == id);

  // tau1 o tau3 sends y to y + (1+beta)x1
  GroupElement c = compose(ex.tau1, ex.tau3);
  LinearForm img = c.image(3);
  CHECK(img.coeffs[0] == ex.f.one() + ex.beta);
  CHECK(img.coeffs[3] == ex.f.one());
}

TEST_CASE("substitution action on polynomials") {
  SWExample sw;
  Poly x3 = Poly::variable(sw.f, 4, 2), x4 = Poly::variable(sw.f, 4, 3);
  CHECK(act(sw.sigma, x4) == x4 + x3);
  CHECK(act(GroupElement::identity(sw.f, 4), x4) == x4);

  // multiplicativity
  Poly prod = act(sw.tau, x4 * x4 + x3);
  CHECK(prod == act(sw.tau, x4) * act(sw.tau, x4) + act(sw.tau, x3));

  // composition law: act(g o h, f) = act(g, act(h, f))
  MainExample ex(3);
  Poly y = Poly::variable(ex.f, 4, 3);
  GroupElement gh = compose(ex.sigma, ex.tau3);
  CHECK(act(gh, y.pow(2)) == act(ex.sigma, act(ex.tau3, y.pow(2))));

  // rho fixes y^p - y x^{p-1} in the Stong setup
  for (unsigned p : {2u, 3u}) {
    StongExample st(p);
    Poly x = Poly::variable(st.f, 3, 0), yy = Poly::variable(st.f, 3, 1);
    Poly n2 = yy.pow(p) - yy * x.pow(p - 1);
    CHECK(act(st.rho, n2) == n2);
  }
}

TEST_CASE("enumeration") {
  SWExample sw;
  CHECK(sw.G.order() == 4);
  CHECK(sw.Gp.order() == 2);
  CHECK(Group::trivial(sw.f, 4).order() == 1);

  for (unsigned p : {2u, 3u}) {
    MainExample ex(p);
    std::size_t expect = 1;
    for (int i = 0; i < 3; ++i) expect *= p;
    CHECK(ex.Gp.order() == expect);         // p^3: the defining relations are independent
    CHECK(ex.G.order() == expect * p);      // p^4
  }

  // cap
  StongExample st(3);
  CHECK_THROWS_AS(Group::enumerate(st.f, 3, {st.rho, st.tau, st.sigma}, 8), CapError);

  // non-unitriangular generators are rejected
  const Field& f2 = Field::get(2, 1);
  GroupElement bad = elem_from_rows(
      f2, {{f2.one(), f2.one()}, {f2.zero(), f2.one()}});  // x1 -> x1 + x2
  CHECK_THROWS_AS(Group::enumerate(f2, 2, {bad}), SpecError);
}

TEST_CASE("pseudo-reflection detection and data") {
  MainExample ex(2);
  CHECK(is_pseudo_reflection(ex.sigma));
  auto info = transvection_info(ex.sigma);
  CHECK(info.beta == 2);  // sigma moves y into x3
  CHECK(info.line == unit_form(ex.f, 4, 2));

  CHECK_FALSE(is_pseudo_reflection(GroupElement::identity(ex.f, 4)));
  CHECK_THROWS_AS(transvection_info(GroupElement::identity(ex.f, 4)), Error);

  // tau1 o tau3 is a transvection with line x1
  GroupElement c = compose(ex.tau1, ex.tau3);
  CHECK(is_pseudo_reflection(c));
  CHECK(transvection_info(c).beta == 0);

  // sigma o tau (SW) moves two variables and is not a pseudo-reflection
  SWExample sw;
  CHECK_FALSE(is_pseudo_reflection(compose(sw.sigma, sw.tau)));
}

TEST_CASE("beta of a group") {
  MainExample ex(2);
  CHECK(beta_of_group(ex.Gp) == 0);   // all reflections share line x1
  CHECK(beta_of_group(ex.G) == 2);    // sigma reaches x3
  Group s = Group::enumerate(ex.f, 4, {ex.sigma});
  CHECK(beta_of_group(s) == transvection_info(ex.sigma).beta);
  CHECK_THROWS_AS(beta_of_group(Group::trivial(ex.f, 4)), Error);
  CHECK(beta_or_sentinel(Group::trivial(ex.f, 4)) == -1);
}

TEST_CASE("subgroups and normality") {
  MainExample ex(2);
  CHECK(is_normal(ex.Gp, ex.G));  // abelian
  CHECK(is_normal(Group::trivial(ex.f, 4), ex.G));
  Group b = Group::enumerate(ex.f, 4, {ex.tau1, ex.tau2, ex.sigma});
  CHECK(is_normal(b, ex.G));
  CHECK_THROWS_AS(subgroup(ex.Gp, {ex.sigma}), Error);  // sigma outside G'

  // a genuinely non-normal subgroup: in the group generated by
  // s: x3 -> x3 + x2 and t: x2 -> x2 + x1, <t> is not normal
  const Field& f2 = Field::get(2, 1);
  GroupElement s = translation_gen(f2, 3, 2, 1, f2.one());
  GroupElement t = translation_gen(f2, 3, 1, 0, f2.one());
  Group g = Group::enumerate(f2, 3, {s, t});
  CHECK_FALSE(is_normal(Group::enumerate(f2, 3, {s}), g));
}

TEST_CASE("composition series") {
  SWExample sw;
  auto series = composition_series(sw.G);
  REQUIRE(series.chain.size() == 3);
  CHECK(series.chain[1].same_elements(sw.Gp));
  CHECK(transvection_info(series.witnesses[0]).beta == 0);
  CHECK(transvection_info(series.witnesses[1]).beta == 2);
  std::string why;
  CHECK(validate_series(sw.G, series, &why));

  auto trivial_series = composition_series(Group::trivial(sw.f, 4));
  CHECK(trivial_series.chain.size() == 1);
  CHECK(validate_series(Group::trivial(sw.f, 4), trivial_series));

  for (unsigned p : {2u, 3u}) {
    MainExample ex(p);
    auto ms = composition_series(ex.G);
    REQUIRE(ms.chain.size() == 5);
    std::vector<std::uint32_t> betas;
    for (const auto& w : ms.witnesses) betas.push_back(transvection_info(w).beta);
    CHECK(betas == std::vector<std::uint32_t>{0, 0, 0, 2});
    CHECK(validate_series(ex.G, ms, &why));
    auto [gp, sigma] = last_step_data(ms);
    CHECK(gp.same_elements(ex.Gp));
    CHECK(transvection_info(sigma).beta == 2);
  }

  // groups that are not transvection-generated are rejected
  GroupElement st = compose(sw.sigma, sw.tau);
  Group h = Group::enumerate(sw.f, 4, {st});
  CHECK_THROWS_AS(composition_series(h), Error);
}

TEST_CASE("last step of a length-one series") {
  const Field& f2 = Field::get(2, 1);
  GroupElement t = translation_gen(f2, 2, 1, 0, f2.one());
  Group g = Group::enumerate(f2, 2, {t});
  auto series = composition_series(g);
  auto [gp, w] = last_step_data(series);
  CHECK(gp.order() == 1);
  CHECK(w == t);
  CHECK_THROWS_AS(last_step_data(composition_series(Group::trivial(f2, 2))), Error);
}

TEST_CASE("subgroup fixing all variables but one") {
  for (unsigned p : {2u, 3u}) {
    MainExample ex(p);
    Group h = subgroup_fixing_all_but(ex.Gp, 3);
    CHECK(h.order() == ex.p);  // generated by tau3
    CHECK(h.contains(ex.tau3));

    Group c = Group::enumerate(ex.f, 4, {ex.tau1, ex.tau2});
    CHECK(subgroup_fixing_all_but(c, 3).order() == 1);
  }
  const Field& f2 = Field::get(2, 1);
  CHECK(subgroup_fixing_all_but(Group::trivial(f2, 2), 1).order() == 1);
}

TEST_CASE("stabilizer of a form") {
  MainExample ex(2);
  Group st = stabilizer_of_form(ex.Gp, unit_form(ex.f, 4, 2));  // everything fixes x3
  CHECK(st.same_elements(ex.Gp));
  Group full = stabilizer_of_form(ex.G, unit_form(ex.f, 4, 0));  // x1 is always fixed
  CHECK(full.same_elements(ex.G));
  Group c = Group::enumerate(ex.f, 4, {ex.tau1, ex.tau2});
  CHECK(stabilizer_of_form(c, unit_form(ex.f, 4, 2)).same_elements(c));
}

TEST_CASE("factoring a transvection outside the normal subgroup") {
  MainExample ex(3);
  // tau = sigma: k = 1, g = identity
  auto fac = factor_outside_transvection(ex.sigma, ex.sigma, ex.Gp);
  CHECK(fac.k == 1);
  CHECK(fac.g.is_identity());

  // tau = sigma o tau3
  GroupElement tau = compose(ex.sigma, ex.tau3);
  REQUIRE(is_pseudo_reflection(tau));
  auto f2 = factor_outside_transvection(tau, ex.sigma, ex.Gp);
  CHECK(f2.k == 1);
  CHECK(f2.g == ex.tau3);

  // tau = sigma^2 o tau3 for p = 3
  GroupElement tau2 = compose(compose(ex.sigma, ex.sigma), ex.tau3);
  REQUIRE(is_pseudo_reflection(tau2));
  auto f3 = factor_outside_transvection(tau2, ex.sigma, ex.Gp);
  CHECK(f3.k == 2);
  CHECK(f3.g == ex.tau3);
}

TEST_CASE("conjugation preserves transvections and beta (exhaustive on fixtures)") {
  SWExample sw;
  MainExample ex(2);
  for (const Group* gptr : {&sw.G, &ex.G}) {
    const Group& g = *gptr;
    for (const auto& e : g.elements()) {
      GroupElement ei = inverse(e);
      for (const auto& info : g.pseudo_reflections()) {
        GroupElement conj = compose(compose(e, info.element), ei);
        REQUIRE(is_pseudo_reflection(conj));
        CHECK(transvection_info(conj).beta == info.beta);
      }
    }
    // equal beta implies commuting
    for (const auto& a : g.pseudo_reflections())
      for (const auto& b : g.pseudo_reflections())
        if (a.beta == b.beta)
          CHECK(compose(a.element, b.element) == compose(b.element, a.element));
  }
}
