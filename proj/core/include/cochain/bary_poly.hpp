#pragma once

#include "cochain/index_set.hpp"
#include "cochain/polynomial.hpp"
#include "cochain/rational.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cochain {

// Chart conventions. A simplex is identified by its increasing vertex set V.
// Its smallest label is the anchor; the chart variables are the barycentric
// coordinates of the remaining labels in increasing order, and the anchor
// coordinate is eliminated through lambda_anchor = 1 - sum(others).

int anchor_of(const IndexSet& vertices);
int chart_size(const IndexSet& vertices);
/// Chart variable index of `label`, or -1 for the anchor. Throws
/// InvalidIndexSet if the label is not a vertex.
int chart_index(const IndexSet& vertices, int label);
/// lambda_label written in the chart of `vertices`.
Polynomial chart_coordinate(const IndexSet& vertices, int label);

/// An exact barycentric point of a simplex: one coordinate per vertex.
class RationalPoint {
 public:
  RationalPoint(IndexSet vertices, std::vector<Rational> coords);

  /// Barycenter: every coordinate equals 1/|V|.
  static RationalPoint barycenter(const IndexSet& vertices);
  static RationalPoint vertex(const IndexSet& vertices, int label);

  const IndexSet& vertices() const { return vertices_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](int label) const;
  bool inside() const;
  bool strictly_inside() const;
  /// Values of the chart variables of `vertices()`.
  std::vector<Rational> chart_values() const;

 private:
  IndexSet vertices_;
  std::vector<Rational> coords_;
};

/// Polynomial in the barycentric coordinates of a simplex, stored in
/// canonical anchor-chart form.
class BaryPoly {
 public:
  explicit BaryPoly(IndexSet vertices);
  BaryPoly(IndexSet vertices, Polynomial chart_poly);

  static BaryPoly constant(const IndexSet& vertices, const Rational& c);
  static BaryPoly lambda(const IndexSet& vertices, int label);
  /// lambda_J = sum of lambda_j over J.
  static BaryPoly lambda_sum(const IndexSet& vertices, const IndexSet& J);

  const IndexSet& vertices() const { return vertices_; }
  const Polynomial& chart() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  /// Affine degree; std::nullopt stands for the degree of the zero
  /// polynomial (minus infinity).
  std::optional<int> degree() const;

  BaryPoly& operator+=(const BaryPoly& o);
  BaryPoly& operator-=(const BaryPoly& o);
  BaryPoly& operator*=(const BaryPoly& o);
  BaryPoly& operator*=(const Rational& c);
  friend BaryPoly operator+(BaryPoly a, const BaryPoly& b) { return a += b; }
  friend BaryPoly operator-(BaryPoly a, const BaryPoly& b) { return a -= b; }
  friend BaryPoly operator*(BaryPoly a, const BaryPoly& b) { return a *= b; }
  friend BaryPoly operator*(BaryPoly a, const Rational& c) { return a *= c; }
  BaryPoly operator-() const { return BaryPoly(vertices_, -poly_); }
  bool operator==(const BaryPoly& o) const = default;

  Rational evaluate(const RationalPoint& x) const;

 private:
  IndexSet vertices_;
  Polynomial poly_;
};

/// One symmetric monomial: exponents over every label of V (in V's order)
/// and a rational coefficient.
struct SymmetricMonomial {
  std::vector<int> alpha;
  Rational coeff;
};

/// Canonicalizes a symmetric barycentric expression on V. Throws ParseError
/// if a multi-index does not have one entry per vertex.
BaryPoly poly_from_symmetric(const IndexSet& vertices, std::span<const SymmetricMonomial> expr);

/// Writes a polynomial as symmetric monomials with zero anchor exponent.
std::vector<SymmetricMonomial> to_symmetric(const BaryPoly& p);

/// Exact quotient p / q on the same simplex. Throws NotDivisible if there is
/// none.
BaryPoly divide_exact(const BaryPoly& p, const BaryPoly& q);

}  // namespace cochain
