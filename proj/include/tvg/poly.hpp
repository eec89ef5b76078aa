#pragma once

// Sparse multivariate polynomials over a Field, graded by total degree.
// Terms are kept in a canonical graded-lexicographic order in which the
// *last* variable is the most significant; iteration yields the leading
// term first. Values are immutable in spirit: all operations return new
// polynomials.

#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tvg/field.hpp"

namespace tvg {

struct Monomial {
  std::vector<std::uint32_t> e;

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Graded-lex "greater" with the last variable most significant. Used as the
// map comparator so polynomials iterate from the leading term down.
struct MonoOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = a.e.size(); i-- > 0;)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  }
};

class Poly;
Poly operator*(const Poly& a, const Poly& b);

class Poly {
 public:
  // Hard cap on degrees; anything past this is a runaway computation.
  static constexpr std::uint64_t kDegreeCap = 1000000;

  Poly() = default;
  Poly(const Field& f, std::uint32_t nvars) : field_(&f), nvars_(nvars) {}

  static Poly zero(const Field& f, std::uint32_t nvars) { return Poly(f, nvars); }
  static Poly constant(const Field& f, std::uint32_t nvars, FieldElem c) {
    Poly r(f, nvars);
    r.add_term(Monomial{std::vector<std::uint32_t>(nvars, 0)}, c);
    return r;
  }
  static Poly one(const Field& f, std::uint32_t nvars) { return constant(f, nvars, f.one()); }
  static Poly variable(const Field& f, std::uint32_t nvars, std::uint32_t i) {
    Poly r(f, nvars);
    Monomial m{std::vector<std::uint32_t>(nvars, 0)};
    m.e[i] = 1;
    r.add_term(m, f.one());
    return r;
  }

  const Field& field() const { return *field_; }
  std::uint32_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, FieldElem, MonoOrder>& terms() const { return terms_; }

  std::uint64_t degree() const {
    // leading term first, so its degree is the total degree
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.begin()->first;
  }
  FieldElem leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.begin()->second;
  }

  FieldElem coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_->zero() : it->second;
  }

  void add_term(const Monomial& m, FieldElem c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    compat(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    compat(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r(*a.field_, a.nvars_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Poly scaled(FieldElem c) const {
    Poly r(*field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
  }

  Poly pow(std::uint64_t e) const {
    Poly r = one(*field_, nvars_);
    Poly base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  Poly homogeneous_component(std::uint64_t d) const {
    Poly r(*field_, nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
  }

  bool depends_on(std::uint32_t var) const {
    for (const auto& [m, c] : terms_)
      if (m.e[var] > 0) return true;
    return false;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  void compat(const Poly& o) const {
    if (field_ != o.field_ || nvars_ != o.nvars_)
      throw Error("polynomials from mismatched rings");
  }

 private:
  const Field* field_ = nullptr;
  std::uint32_t nvars_ = 0;
  std::map<Monomial, FieldElem, MonoOrder> terms_;
};

inline Poly operator*(const Poly& a, const Poly& b) {
  a.compat(b);
  if (!a.is_zero() && !b.is_zero() && a.degree() + b.degree() > Poly::kDegreeCap)
    throw CapError("polynomial degree cap exceeded");
  Poly r(a.field(), a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m{ma.e};
      for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

inline Poly operator*(const Poly& a, FieldElem c) { return a.scaled(c); }
inline Poly operator*(FieldElem c, const Poly& a) { return a.scaled(c); }

/// Exact quotient f/g, or nullopt when g does not divide f. Division by
/// leading-term reduction under the graded-lex order.
inline std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
  f.compat(g);
  if (g.is_zero()) throw Error("division by the zero polynomial");
  Poly q(f.field(), f.nvars());
  Poly r = f;
  const Monomial& lg = g.leading_monomial();
  const FieldElem lcg = g.leading_coeff();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    Monomial m{lr.e};
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (lr.e[i] < lg.e[i]) return std::nullopt;
      m.e[i] = lr.e[i] - lg.e[i];
    }
    FieldElem c = r.leading_coeff() / lcg;
    Poly step(f.field(), f.nvars());
    step.add_term(m, c);
    q += step;
    r -= step * g;
  }
  return q;
}

/// Scalar c with a == c*b, when the two polynomials are proportional.
inline std::optional<FieldElem> proportional_scalar(const Poly& a, const Poly& b) {
  a.compat(b);
  if (b.is_zero()) return a.is_zero() ? std::optional<FieldElem>(a.field().zero()) : std::nullopt;
  if (a.is_zero()) return std::nullopt;
  if (a.term_count() != b.term_count()) return std::nullopt;
  FieldElem c = a.leading_coeff() / b.leading_coeff();
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return std::nullopt;
    if (ia->second != ib->second * c) return std::nullopt;
  }
  return c;
}

/// A nonzero linear form, with the pivot being the largest variable index
/// carrying a nonzero coefficient.
struct LinearForm {
  const Field* field = nullptr;
  std::vector<FieldElem> coeffs;

  static LinearForm zero(const Field& f, std::uint32_t nvars) {
    return {&f, std::vector<FieldElem>(nvars, f.zero())};
  }

  std::uint32_t nvars() const { return static_cast<std::uint32_t>(coeffs.size()); }

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  std::uint32_t pivot() const {
    for (std::size_t i = coeffs.size(); i-- > 0;)
      if (!coeffs[i].is_zero()) return static_cast<std::uint32_t>(i);
    throw Error("pivot of the zero linear form");
  }

  LinearForm normalized() const {
    std::uint32_t piv = pivot();
    FieldElem inv = field->inv(coeffs[piv]);
    LinearForm r = *this;
    for (auto& c : r.coeffs) c = c * inv;
    return r;
  }

  LinearForm scaled(FieldElem s) const {
    LinearForm r = *this;
    for (auto& c : r.coeffs) c = c * s;
    return r;
  }

  Poly to_poly() const {
    Poly r(*field, nvars());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (!coeffs[i].is_zero()) {
        Monomial m{std::vector<std::uint32_t>(coeffs.size(), 0)};
        m.e[i] = 1;
        r.add_term(m, coeffs[i]);
      }
    return r;
  }

  friend LinearForm operator+(const LinearForm& a, const LinearForm& b) {
    LinearForm r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] + b.coeffs[i];
    return r;
  }
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b) {
    LinearForm r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] - b.coeffs[i];
    return r;
  }

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.field == b.field && a.coeffs == b.coeffs;
  }
  friend bool operator!=(const LinearForm& a, const LinearForm& b) { return !(a == b); }
  friend bool operator<(const LinearForm& a, const LinearForm& b) {
    for (std::size_t i = a.coeffs.size(); i-- > 0;)
      if (a.coeffs[i].v != b.coeffs[i].v) return a.coeffs[i].v < b.coeffs[i].v;
    return false;
  }
};

inline bool proportional(const LinearForm& a, const LinearForm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.normalized() == b.normalized();
}

inline LinearForm normalize_linear_form(const LinearForm& l) {
  if (l.is_zero()) throw Error("cannot normalize the zero linear form");
  return l.normalized();
}

/// Extracts a linear form from a homogeneous degree-1 polynomial.
inline LinearForm linear_form_of(const Poly& f) {
  LinearForm r = LinearForm::zero(f.field(), f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != 1) throw Error("polynomial is not a linear form");
    for (std::size_t i = 0; i < m.e.size(); ++i)
      if (m.e[i]) r.coeffs[i] = c;
  }
  return r;
}

/// f written as sum_e f_{p^e} * x_var^{p^e}, with every coefficient free of
/// x_var. Exists exactly when each occurrence of x_var has p-power exponent.
struct PPolyDecomposition {
  std::uint32_t var = 0;
  // key e stands for the exponent p^e of x_var
  std::map<unsigned, Poly> parts;

  Poly reassemble(const Field& f, std::uint32_t nvars) const {
    Poly r(f, nvars);
    for (const auto& [e, part] : parts) {
      std::uint64_t pe = 1;
      for (unsigned i = 0; i < e; ++i) pe *= f.p();
      Poly xpow(f, nvars);
      Monomial m{std::vector<std::uint32_t>(nvars, 0)};
      m.e[var] = static_cast<std::uint32_t>(pe);
      xpow.add_term(m, f.one());
      r += part * xpow;
    }
    return r;
  }
};

inline std::optional<PPolyDecomposition> p_poly_decompose(const Poly& f, std::uint32_t var) {
  const unsigned p = f.field().p();
  PPolyDecomposition dec;
  dec.var = var;
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t ev = m.e[var];
    // ev must be a power of p (p^0 = 1 allowed; 0 is not: every term must
    // contain the designated variable)
    unsigned e = 0;
    std::uint64_t pe = 1;
    while (pe < ev) {
      pe *= p;
      ++e;
    }
    if (pe != ev || ev == 0) return std::nullopt;
    Monomial rest{m.e};
    rest.e[var] = 0;
    auto it = dec.parts.find(e);
    if (it == dec.parts.end())
      it = dec.parts.emplace(e, Poly(f.field(), f.nvars())).first;
    it->second.add_term(rest, c);
  }
  return dec;
}

/// Applies sigma - 1 to a p-polynomial, where sigma substitutes
/// x_var -> x_var + l and fixes every other variable. Frobenius collapses
/// each piece: (sigma-1)(f_{p^e} x^{p^e}) = f_{p^e} l^{p^e}.
inline Poly apply_sigma_minus_one_to_ppoly(const PPolyDecomposition& dec, const LinearForm& l) {
  if (!l.coeffs[dec.var].is_zero())
    throw Error("substitution form involves the decomposition variable");
  const Field& f = *l.field;
  const std::uint32_t n = l.nvars();
  Poly lp = l.to_poly();
  Poly r(f, n);
  for (const auto& [e, part] : dec.parts) {
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= f.p();
    r += part * lp.pow(pe);
  }
  return r;
}

// ---- printing -------------------------------------------------------------

/// Optional pretty-name lookup for scalars (e.g. a binding named in a group
/// spec file); returns nullopt to fall back to the t-polynomial rendering.
using ScalarNamer = std::function<std::optional<std::string>(FieldElem)>;

inline std::string scalar_to_string(FieldElem c, const ScalarNamer& namer = nullptr) {
  if (namer)
    if (auto s = namer(c)) return *s;
  return c.field->to_string(c);
}

inline std::string poly_to_string(const Poly& f, const std::vector<std::string>& vars,
                                  const ScalarNamer& namer = nullptr) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (!m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
    }
    std::string cs = scalar_to_string(c, namer);
    bool needs_parens = cs.find('+') != std::string::npos;
    if (mono.empty()) {
      out += needs_parens ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += (needs_parens ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out;
}

inline std::string linear_form_to_string(const LinearForm& l, const std::vector<std::string>& vars,
                                         const ScalarNamer& namer = nullptr) {
  return poly_to_string(l.to_poly(), vars, namer);
}

}  // namespace tvg
