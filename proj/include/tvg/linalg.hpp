#pragma once

// Dense linear algebra over a Field on raw element handles. Rows are
// coefficient vectors over an externally fixed column basis (monomials of a
// given degree, ordered leading-first).

#include <cstdint>
#include <map>
#include <vector>

#include "tvg/field.hpp"

namespace tvg {

using Row = std::vector<std::uint16_t>;

/// Row space kept in echelon form, one row per pivot column, pivots monic.
/// Rows are reduced against existing pivots on insertion (columns before a
/// row's pivot are zero, so reducing in ascending pivot order is complete).
class EchelonSpace {
 public:
  explicit EchelonSpace(const Field& f) : field_(&f) {}

  std::size_t rank() const { return rows_.size(); }

  /// Reduces r against the current rows in place.
  void reduce(Row& r) const {
    for (const auto& [piv, row] : rows_) {
      std::uint16_t c = r[piv];
      if (!c) continue;
      std::uint16_t nc = field_->raw_neg(c);
      for (std::size_t j = piv; j < r.size(); ++j)
        if (row[j]) r[j] = field_->raw_add(r[j], field_->raw_mul(nc, row[j]));
    }
  }

  /// Reduce and insert when independent; returns true when the rank grew.
  bool insert(Row r) {
    reduce(r);
    std::size_t piv = 0;
    while (piv < r.size() && !r[piv]) ++piv;
    if (piv == r.size()) return false;
    std::uint16_t inv = field_->raw_inv(r[piv]);
    for (std::size_t j = piv; j < r.size(); ++j)
      if (r[j]) r[j] = field_->raw_mul(r[j], inv);
    rows_.emplace(piv, std::move(r));
    return true;
  }

  bool contains(Row r) const {
    reduce(r);
    for (auto v : r)
      if (v) return false;
    return true;
  }

  const std::map<std::size_t, Row>& rows() const { return rows_; }

 private:
  const Field* field_;
  std::map<std::size_t, Row> rows_;  // pivot column -> row
};

/// Fully reduced canonical basis of the span of the given rows: unique RREF,
/// rows ordered by ascending pivot column (i.e. descending leading monomial
/// when columns are monomials in leading-first order).
inline std::vector<Row> canonical_rref(const Field& f, std::vector<Row> rows) {
  EchelonSpace sp(f);
  for (auto& r : rows) sp.insert(std::move(r));
  // back-substitute to clear entries above each pivot
  std::vector<std::pair<std::size_t, Row>> out(sp.rows().begin(), sp.rows().end());
  for (std::size_t i = out.size(); i-- > 0;) {
    for (std::size_t j = 0; j < i; ++j) {
      std::uint16_t c = out[j].second[out[i].first];
      if (!c) continue;
      std::uint16_t nc = f.raw_neg(c);
      Row& target = out[j].second;
      const Row& src = out[i].second;
      for (std::size_t t = out[i].first; t < target.size(); ++t)
        if (src[t]) target[t] = f.raw_add(target[t], f.raw_mul(nc, src[t]));
    }
  }
  std::vector<Row> result;
  result.reserve(out.size());
  for (auto& [piv, r] : out) result.push_back(std::move(r));
  return result;
}

/// Canonical basis of the common kernel of the maps given as constraint
/// rows: solutions v with A v = 0, where each element of `constraints` is a
/// row of A over `ncols` columns.
inline std::vector<Row> kernel_basis(const Field& f, const std::vector<Row>& constraints,
                                     std::size_t ncols) {
  EchelonSpace sp(f);
  for (const auto& r : constraints) sp.insert(r);
  std::vector<Row> rref;
  {
    std::vector<Row> rows;
    for (const auto& [piv, r] : sp.rows()) rows.push_back(r);
    rref = canonical_rref(f, std::move(rows));
  }
  std::vector<bool> is_pivot(ncols, false);
  std::vector<std::size_t> pivot_of_row(rref.size());
  for (std::size_t i = 0; i < rref.size(); ++i) {
    std::size_t piv = 0;
    while (!rref[i][piv]) ++piv;
    pivot_of_row[i] = piv;
    is_pivot[piv] = true;
  }
  std::vector<Row> kernel;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Row v(ncols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rref.size(); ++i)
      v[pivot_of_row[i]] = f.raw_neg(rref[i][free]);
    kernel.push_back(std::move(v));
  }
  return canonical_rref(f, std::move(kernel));
}

}  // namespace tvg
