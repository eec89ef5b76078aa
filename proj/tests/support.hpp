#pragma once

// Shared builders for the worked examples used across the test suites.

#include <vector>

#include "tvg/group.hpp"

namespace tvgtest {

using namespace tvg;

inline GroupElement elem_from_rows(const Field& f,
                                   std::vector<std::vector<FieldElem>> rows) {
  std::vector<LinearForm> imgs;
  for (auto& r : rows) imgs.push_back(LinearForm{&f, std::move(r)});
  return GroupElement(f, std::move(imgs));
}

/// Transvection fixing everything except x_target, which gains coeff * x_source.
inline GroupElement translation_gen(const Field& f, std::uint32_t n, std::uint32_t target,
                                    std::uint32_t source, FieldElem coeff) {
  GroupElement id = GroupElement::identity(f, n);
  std::vector<LinearForm> imgs = id.images();
  imgs[target].coeffs[source] = imgs[target].coeffs[source] + coeff;
  return GroupElement(f, std::move(imgs));
}

// Two commuting transvections in four variables over GF(2):
// tau: x2 -> x2 + x1, sigma: x4 -> x4 + x3.
struct SWExample {
  const Field& f = Field::get(2, 1);
  std::uint32_t n = 4;
  GroupElement tau = translation_gen(f, n, 1, 0, f.one());
  GroupElement sigma = translation_gen(f, n, 3, 2, f.one());
  Group G = Group::enumerate(f, n, {tau, sigma});
  Group Gp = Group::enumerate(f, n, {tau});
};

// Three transvections in three variables over GF(p^3) with scalars
// omega = t, mu = t^2 (a basis {1, omega, mu} of the field over GF(p)).
struct StongExample {
  unsigned p;
  const Field& f;
  std::uint32_t n = 3;
  GroupElement rho, tau, sigma;
  Group G;

  explicit StongExample(unsigned p_)
      : p(p_), f(Field::get(p_, 3)),
        rho(translation_gen(f, 3, 1, 0, f.one())),
        tau(translation_gen(f, 3, 2, 0, f.one())),
        sigma(make_sigma(f)),
        G(Group::enumerate(f, 3, {rho, tau, sigma})) {}

  static GroupElement make_sigma(const Field& f) {
    GroupElement id = GroupElement::identity(f, 3);
    std::vector<LinearForm> imgs = id.images();
    imgs[1].coeffs[0] = f.gen();                    // y -> y + omega*x
    imgs[2].coeffs[0] = f.mul(f.gen(), f.gen());    // z -> z + mu*x
    return GroupElement(f, std::move(imgs));
  }
};

// Four commuting transvections in variables (x1, x2, x3, y) over GF(p^6),
// with alpha of degree 2 and beta of degree 3 over the prime field.
struct MainExample {
  unsigned p;
  const Field& f;
  std::uint32_t n = 4;
  FieldElem alpha, beta;
  GroupElement tau1, tau2, tau3, sigma;
  Group G, Gp;

  explicit MainExample(unsigned p_)
      : p(p_),
        f(Field::get(p_, 6)),
        alpha(degree_element(f, 2)),
        beta(degree_element(f, 3)),
        tau1(make_tau(f, f.one(), f.one())),
        tau2(make_tau(f, alpha, f.one())),
        tau3(translation_gen(f, 4, 3, 0, beta)),
        sigma(translation_gen(f, 4, 3, 2, f.one())),
        G(Group::enumerate(f, 4, {tau1, tau2, tau3, sigma})),
        Gp(Group::enumerate(f, 4, {tau1, tau2, tau3})) {}

  // element whose prime-field extension degree is d (a generator of the
  // GF(p^d) subfield's multiplicative group)
  static FieldElem degree_element(const Field& f, unsigned d) {
    std::uint64_t sub = 1;
    for (unsigned i = 0; i < d; ++i) sub *= f.p();
    for (std::uint32_t v = 2; v < f.size(); ++v)
      if (f.mult_order({&f, v}) == sub - 1) return {&f, v};
    throw Error("no element of the requested degree");
  }

  static GroupElement make_tau(const Field& f, FieldElem a, FieldElem b) {
    GroupElement id = GroupElement::identity(f, 4);
    std::vector<LinearForm> imgs = id.images();
    imgs[1].coeffs[0] = a;  // x2 -> x2 + a*x1
    imgs[3].coeffs[0] = b;  // y  -> y  + b*x1
    return GroupElement(f, std::move(imgs));
  }
};

inline LinearForm unit_form(const Field& f, std::uint32_t n, std::uint32_t i) {
  LinearForm l = LinearForm::zero(f, n);
  l.coeffs[i] = f.one();
  return l;
}

}  // namespace tvgtest
