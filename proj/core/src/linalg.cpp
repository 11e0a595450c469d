#include "cochain/linalg.hpp"

#include <algorithm>
#include <utility>

namespace cochain {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0) return;
  for (const auto& [key, value] : x) {
    auto [it, inserted] = y.try_emplace(key, 0);
    it->second += a * value;
    if (it->second == 0) y.erase(it);
  }
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  // Rows only hold keys at or after their pivot, so clearing entries in
  // increasing key order never reintroduces an earlier key.
  bool started = false;
  CoordKey cursor;
  while (true) {
    auto it = started ? v.upper_bound(cursor) : v.begin();
    if (it == v.end()) break;
    started = true;
    cursor = it->first;
    auto row = rows_.find(cursor);
    if (row != rows_.end()) {
      const Rational factor = -it->second;
      axpy(v, factor, row->second);
    }
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Rational pivot = v.begin()->second;
  for (auto& [key, value] : v) value /= pivot;
  const CoordKey key = v.begin()->first;
  rows_.emplace(key, std::move(v));
  return true;
}

std::vector<std::vector<Rational>> nullspace(const std::vector<SparseVector>& columns) {
  std::map<CoordKey, std::size_t> row_index;
  for (const auto& col : columns)
    for (const auto& [key, value] : col) row_index.emplace(key, 0);
  std::size_t nrows = 0;
  for (auto& [key, idx] : row_index) idx = nrows++;
  const std::size_t ncols = columns.size();

  std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(ncols, Rational(0)));
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& [key, value] : columns[c]) a[row_index.at(key)][c] = value;

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cochain
