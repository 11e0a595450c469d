#pragma once

#include "cochain/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace cochain {

/// Coordinate of a form in a flattened coefficient space: which piece (facet
/// or 0 for interior forms), which dz mask, which monomial.
struct CoordKey {
  int piece = 0;
  std::uint32_t mask = 0;
  std::uint64_t mono = 0;
  auto operator<=>(const CoordKey&) const = default;
};

using SparseVector = std::map<CoordKey, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

/// Row echelon basis over the rationals built one vector at a time. Used to
/// select maximal independent subsets and to test span membership.
class EchelonBasis {
 public:
  /// Reduces v against the stored rows; returns the remainder.
  SparseVector reduce(SparseVector v) const;
  /// Adds v if it is independent of the stored rows; returns whether it was.
  bool insert(SparseVector v);
  bool in_span(const SparseVector& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::map<CoordKey, SparseVector> rows_;  // keyed by pivot, pivot entry 1
};

/// Basis of {c : sum_i c_i columns[i] = 0}, in reduced form: each vector has
/// a 1 at its own free column and zeros at the other free columns.
std::vector<std::vector<Rational>> nullspace(const std::vector<SparseVector>& columns);

}  // namespace cochain
