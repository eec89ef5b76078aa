#pragma once

// Exact arithmetic in GF(p^k). Elements of a field are small integer handles
// into a shared, immutable Field context; the handle encodes the coefficient
// vector of the element in base p (index = sum c_i * p^i for the residue
// class of c_0 + c_1 t + ... + c_{k-1} t^{k-1} modulo the field's modulus).
//
// Field contexts are interned: Field::get() returns the same instance for the
// same (p, k, modulus), so pointer identity doubles as field equality.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace tvg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad field parameters, bad spec files, bad options.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exceeded (group order, degree budget,
/// exhaustion bound). Distinct from SpecError so callers can map it to a
/// dedicated exit code.
class CapError : public Error {
 public:
  using Error::Error;
};

class Field;

struct FieldElem {
  const Field* field = nullptr;
  std::uint32_t v = 0;

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field == b.field && a.v == b.v;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
  friend bool operator<(const FieldElem& a, const FieldElem& b) {
    return a.v < b.v;  // only meaningful within one field
  }
  bool is_zero() const { return v == 0; }
};

namespace detail {

// Dense polynomial arithmetic over GF(p), used only while constructing a
// Field (modulus validation, multiplication before tables exist).
inline std::vector<unsigned> gfp_trim(std::vector<unsigned> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline std::vector<unsigned> gfp_mul(const std::vector<unsigned>& a,
                                     const std::vector<unsigned>& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return gfp_trim(std::move(r));
}

// Remainder of a by monic b.
inline std::vector<unsigned> gfp_mod(std::vector<unsigned> a,
                                     const std::vector<unsigned>& b, unsigned p) {
  a = gfp_trim(std::move(a));
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    unsigned lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i < b.size(); ++i) {
      unsigned sub = (lead * b[i]) % p;
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    a = gfp_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

inline bool gfp_is_irreducible(const std::vector<unsigned>& f, unsigned p) {
  // Trial division by every monic polynomial of degree 1..deg(f)/2.
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::vector<unsigned> g(d + 1, 0);
    g[d] = 1;
    // iterate over all p^d choices of the lower coefficients
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    for (std::uint64_t m = 0; m < total; ++m) {
      std::uint64_t t = m;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      if (gfp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

class Field {
 public:
  /// Interned field with the default modulus for (p, k).
  static const Field& get(unsigned p, unsigned k = 1) {
    return get(p, k, default_modulus(p, k));
  }

  /// Interned field with an explicit monic irreducible modulus, given as
  /// k+1 residues low-to-high.
  static const Field& get(unsigned p, unsigned k, const std::vector<unsigned>& modulus) {
    static std::mutex mtx;
    static std::map<std::tuple<unsigned, unsigned, std::vector<unsigned>>,
                    std::unique_ptr<Field>>
        registry;
    std::vector<unsigned> norm = modulus;
    for (auto& c : norm) c %= p;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(p, k, norm);
    auto it = registry.find(key);
    if (it == registry.end())
      it = registry.emplace(key, std::unique_ptr<Field>(new Field(p, k, norm))).first;
    return *it->second;
  }

  /// Lexicographically smallest monic irreducible of degree k over GF(p).
  static std::vector<unsigned> default_modulus(unsigned p, unsigned k) {
    if (!detail::is_prime(p)) throw SpecError("field characteristic must be prime");
    if (k == 0) throw SpecError("field extension degree must be at least 1");
    if (k == 1) return {0, 1};  // the trivial modulus t
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= p;
    std::vector<unsigned> f(k + 1, 0);
    f[k] = 1;
    for (std::uint64_t m = 0; m < total; ++m) {
      std::uint64_t t = m;
      for (unsigned i = 0; i < k; ++i) {
        f[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      if (detail::gfp_is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible modulus found");  // unreachable
  }

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint32_t size() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  FieldElem zero() const { return {this, 0}; }
  FieldElem one() const { return {this, 1}; }
  /// The residue class of t. Only distinct from a prime-field element when k >= 2.
  FieldElem gen() const { return {this, p_}; }

  FieldElem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {this, static_cast<std::uint32_t>(r)};
  }

  FieldElem from_coeffs(const std::vector<unsigned>& low_to_high) const {
    if (low_to_high.size() > k_)
      throw SpecError("field element has more than k coefficients");
    std::uint32_t v = 0;
    for (std::size_t i = low_to_high.size(); i-- > 0;)
      v = v * p_ + (low_to_high[i] % p_);
    return {this, v};
  }

  std::vector<unsigned> coeffs(FieldElem a) const {
    check(a);
    std::vector<unsigned> c(k_);
    for (unsigned i = 0; i < k_; ++i) c[i] = digits_[a.v * k_ + i];
    return c;
  }

  FieldElem add(FieldElem a, FieldElem b) const { check(a); check(b); return {this, raw_add(a.v, b.v)}; }
  FieldElem sub(FieldElem a, FieldElem b) const { check(a); check(b); return {this, raw_add(a.v, raw_neg(b.v))}; }
  FieldElem mul(FieldElem a, FieldElem b) const { check(a); check(b); return {this, raw_mul(a.v, b.v)}; }
  FieldElem neg(FieldElem a) const { check(a); return {this, raw_neg(a.v)}; }

  FieldElem inv(FieldElem a) const {
    check(a);
    if (a.v == 0) throw Error("division by zero in " + name());
    return {this, inv_[a.v]};
  }

  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

  FieldElem pow(FieldElem a, std::uint64_t e) const {
    check(a);
    return {this, raw_pow(a.v, e)};
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t mult_order(FieldElem a) const {
    check(a);
    if (a.v == 0) throw Error("multiplicative order of zero");
    std::uint64_t n = q_ - 1;
    std::uint64_t ord = n;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      for (std::uint64_t cand : {d, n / d})
        if (cand < ord && raw_pow(a.v, cand) == 1) ord = cand;
    }
    return ord;
  }

  bool in_prime_subfield(FieldElem a) const {
    check(a);
    return a.v < p_;
  }

  /// Membership in GF(p)(gen), computed as the GF(p)-linear span of the
  /// powers of gen.
  bool in_subfield_generated_by(FieldElem a, FieldElem gen) const {
    check(a);
    check(gen);
    std::vector<std::uint32_t> span = span_closure({gen.v});
    for (std::uint32_t x : span)
      if (x == a.v) return true;
    return false;
  }

  /// All elements of the subfield generated by the given elements, sorted.
  std::vector<FieldElem> subfield_generated_by(const std::vector<FieldElem>& gens) const {
    std::vector<std::uint32_t> raw;
    for (auto g : gens) {
      check(g);
      raw.push_back(g.v);
    }
    std::vector<FieldElem> out;
    for (std::uint32_t x : span_closure(raw)) out.push_back({this, x});
    return out;
  }

  std::string to_string(FieldElem a) const {
    check(a);
    if (a.v < p_) return std::to_string(a.v);
    std::string s;
    for (unsigned i = k_; i-- > 0;) {
      unsigned c = digits_[a.v * k_ + i];
      if (!c) continue;
      if (!s.empty()) s += "+";
      if (i == 0) {
        s += std::to_string(c);
        continue;
      }
      if (c != 1) s += std::to_string(c) + "*";
      s += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

  std::string name() const {
    return "GF(" + std::to_string(p_) + (k_ > 1 ? "^" + std::to_string(k_) : "") + ")";
  }

  // Raw interface on element handles, for inner loops.
  std::uint16_t raw_add(std::uint32_t a, std::uint32_t b) const {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    std::uint32_t v = 0;
    for (unsigned i = k_; i-- > 0;)
      v = v * p_ + (digits_[a * k_ + i] + digits_[b * k_ + i]) % p_;
    return static_cast<std::uint16_t>(v);
  }
  std::uint16_t raw_mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    if (!a || !b) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint16_t raw_neg(std::uint32_t a) const { return neg_[a]; }
  std::uint16_t raw_inv(std::uint32_t a) const {
    if (!a) throw Error("division by zero in " + name());
    return inv_[a];
  }
  std::uint16_t raw_pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t le = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[le];
  }

 private:
  Field(unsigned p, unsigned k, std::vector<unsigned> modulus)
      : p_(p), k_(k), modulus_(std::move(modulus)) {
    if (!detail::is_prime(p_)) throw SpecError("field characteristic must be prime");
    if (k_ == 0) throw SpecError("field extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k_; ++i) {
      q *= p_;
      if (q > kMaxSize) throw SpecError("field too large: p^k exceeds " + std::to_string(kMaxSize));
    }
    q_ = static_cast<std::uint32_t>(q);
    if (modulus_.size() != k_ + 1)
      throw SpecError("modulus must list k+1 coefficients (low to high)");
    if (modulus_.back() % p_ != 1) throw SpecError("modulus must be monic");
    if (k_ > 1 && !detail::gfp_is_irreducible(modulus_, p_))
      throw SpecError("modulus is reducible over GF(" + std::to_string(p_) + ")");

    digits_.resize(static_cast<std::size_t>(q_) * k_);
    for (std::uint32_t v = 0; v < q_; ++v) {
      std::uint32_t t = v;
      for (unsigned i = 0; i < k_; ++i) {
        digits_[v * k_ + i] = static_cast<std::uint8_t>(t % p_);
        t /= p_;
      }
    }

    neg_.resize(q_);
    for (std::uint32_t v = 0; v < q_; ++v) {
      std::uint32_t r = 0;
      for (unsigned i = k_; i-- > 0;) r = r * p_ + (p_ - digits_[v * k_ + i]) % p_;
      neg_[v] = static_cast<std::uint16_t>(r);
    }

    build_log_tables();

    inv_.assign(q_, 0);
    for (std::uint32_t v = 1; v < q_; ++v)
      inv_[v] = exp_[(q_ - 1) - log_[v]];

    if (q_ <= kFullTableMax) {
      add_table_.resize(static_cast<std::size_t>(q_) * q_);
      mul_table_.resize(static_cast<std::size_t>(q_) * q_);
      for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) {
          std::uint32_t s = 0;
          for (unsigned i = k_; i-- > 0;)
            s = s * p_ + (digits_[a * k_ + i] + digits_[b * k_ + i]) % p_;
          add_table_[a * q_ + b] = static_cast<std::uint16_t>(s);
          mul_table_[a * q_ + b] =
              (!a || !b) ? 0 : exp_[log_[a] + log_[b]];
        }
    }
  }

  void check(FieldElem a) const {
    if (a.field != this) throw Error("field element used with a mismatched field");
  }

  // Multiplication straight from the definition; used only to bootstrap the
  // discrete-log tables.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    std::vector<unsigned> pa(k_), pb(k_);
    for (unsigned i = 0; i < k_; ++i) {
      pa[i] = digits_[a * k_ + i];
      pb[i] = digits_[b * k_ + i];
    }
    auto prod = detail::gfp_mod(detail::gfp_mul(detail::gfp_trim(pa), detail::gfp_trim(pb), p_),
                                modulus_, p_);
    std::uint32_t v = 0;
    for (std::size_t i = prod.size(); i-- > 0;) v = v * p_ + prod[i];
    return v;
  }

  void build_log_tables() {
    const std::uint32_t n = q_ - 1;
    log_.assign(q_, 0);
    exp_.assign(2 * n, 0);
    // find a generator of the multiplicative group
    std::vector<std::uint64_t> prime_factors;
    {
      std::uint64_t m = n;
      for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
          prime_factors.push_back(d);
          while (m % d == 0) m /= d;
        }
      if (m > 1) prime_factors.push_back(m);
    }
    auto slow_pow = [&](std::uint32_t base, std::uint64_t e) {
      std::uint32_t r = 1;
      while (e) {
        if (e & 1) r = slow_mul(r, base);
        base = slow_mul(base, base);
        e >>= 1;
      }
      return r;
    };
    std::uint32_t g = 0;
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
      bool ok = true;
      for (std::uint64_t f : prime_factors)
        if (slow_pow(cand, n / f) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        g = cand;
        break;
      }
    }
    if (!g) throw Error("no primitive element found");
    std::uint32_t x = 1;
    for (std::uint32_t e = 0; e < n; ++e) {
      exp_[e] = static_cast<std::uint16_t>(x);
      exp_[e + n] = exp_[e];
      log_[x] = e;
      x = slow_mul(x, g);
    }
    if (x != 1) throw Error("primitive element search failed");
  }

  // GF(p)-span of {1} and the given elements, closed under multiplication.
  std::vector<std::uint32_t> span_closure(const std::vector<std::uint32_t>& gens) const {
    // basis rows of digit vectors, kept in echelon form mod p, sorted by
    // ascending pivot index so a single reduction pass is complete
    std::vector<std::vector<unsigned>> basis;
    auto pivot_of = [&](const std::vector<unsigned>& r) {
      unsigned piv = 0;
      while (piv < k_ && r[piv] == 0) ++piv;
      return piv;
    };
    auto reduce_insert = [&](std::uint32_t val) -> bool {
      std::vector<unsigned> row(k_);
      for (unsigned i = 0; i < k_; ++i) row[i] = digits_[val * k_ + i];
      for (const auto& b : basis) {
        unsigned piv = pivot_of(b);
        if (row[piv]) {
          unsigned c = row[piv];
          // row -= c * b  where b has pivot coefficient 1
          for (unsigned i = 0; i < k_; ++i) row[i] = (row[i] + (p_ - c % p_) * b[i]) % p_;
        }
      }
      unsigned piv = pivot_of(row);
      if (piv == k_) return false;
      unsigned invp = 1;
      for (unsigned c = 1; c < p_; ++c)
        if (c * row[piv] % p_ == 1) invp = c;
      for (unsigned i = 0; i < k_; ++i) row[i] = row[i] * invp % p_;
      basis.push_back(row);
      std::sort(basis.begin(), basis.end(),
                [&](const auto& a, const auto& b2) { return pivot_of(a) < pivot_of(b2); });
      return true;
    };
    reduce_insert(1);
    for (auto g : gens) reduce_insert(g);
    // close under multiplication: multiply span elements pairwise until stable
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::uint32_t> members = enumerate_span(basis);
      for (std::uint32_t a : members) {
        for (std::uint32_t b : members) {
          if (reduce_insert(slow_mul(a, b))) grew = true;
        }
        if (grew) break;  // re-enumerate with the larger basis
      }
    }
    auto members = enumerate_span(basis);
    std::sort(members.begin(), members.end());
    return members;
  }

  std::vector<std::uint32_t> enumerate_span(const std::vector<std::vector<unsigned>>& basis) const {
    std::vector<std::uint32_t> vals;
    std::size_t total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= p_;
    vals.reserve(total);
    for (std::size_t m = 0; m < total; ++m) {
      std::size_t t = m;
      std::vector<unsigned> acc(k_, 0);
      for (const auto& b : basis) {
        unsigned c = static_cast<unsigned>(t % p_);
        t /= p_;
        for (unsigned i = 0; i < k_; ++i) acc[i] = (acc[i] + c * b[i]) % p_;
      }
      std::uint32_t v = 0;
      for (unsigned i = k_; i-- > 0;) v = v * p_ + acc[i];
      vals.push_back(v);
    }
    return vals;
  }

  static constexpr std::uint32_t kMaxSize = 60000;
  static constexpr std::uint32_t kFullTableMax = 1024;

  unsigned p_, k_;
  std::uint32_t q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint8_t> digits_;
  std::vector<std::uint16_t> neg_, inv_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> exp_;
  std::vector<std::uint16_t> add_table_, mul_table_;
};

inline FieldElem operator+(FieldElem a, FieldElem b) { return a.field->add(a, b); }
inline FieldElem operator-(FieldElem a, FieldElem b) { return a.field->sub(a, b); }
inline FieldElem operator*(FieldElem a, FieldElem b) { return a.field->mul(a, b); }
inline FieldElem operator/(FieldElem a, FieldElem b) { return a.field->div(a, b); }
inline FieldElem operator-(FieldElem a) { return a.field->neg(a); }

}  // namespace tvg
