#pragma once

#include "cochain/bary_poly.hpp"
#include "cochain/index_set.hpp"
#include "cochain/polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cochain {

/// A differential form on R^nvars with polynomial coefficients, written in
/// the basis dz_sigma (sigma an increasing subset of the variables, stored as
/// a bit mask). Used directly for pullback intermediates on product spaces
/// and as the storage of PolyForm.
class ChartForm {
 public:
  using Terms = std::map<std::uint32_t, Polynomial>;

  ChartForm(int nvars, int degree);
  static ChartForm scalar(const Polynomial& p);
  /// dz_var as a 1-form.
  static ChartForm differential(int nvars, int var);
  /// d of a scalar polynomial.
  static ChartForm gradient(const Polynomial& p);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(std::uint32_t mask) const;
  void add_term(std::uint32_t mask, const Polynomial& p);
  /// Largest total degree of any coefficient; -1 for the zero form.
  int coefficient_degree() const;

  ChartForm& operator+=(const ChartForm& o);
  ChartForm& operator-=(const ChartForm& o);
  ChartForm& operator*=(const Rational& c);
  ChartForm& operator*=(const Polynomial& p);
  friend ChartForm operator+(ChartForm a, const ChartForm& b) { return a += b; }
  friend ChartForm operator-(ChartForm a, const ChartForm& b) { return a -= b; }
  friend ChartForm operator*(ChartForm a, const Rational& c) { return a *= c; }
  friend ChartForm operator*(ChartForm a, const Polynomial& p) { return a *= p; }
  ChartForm operator-() const { return *this * Rational(-1); }
  bool operator==(const ChartForm& o) const = default;

  /// Applies f to every coefficient, dropping zero results.
  template <class F>
  ChartForm map_coefficients(F&& f) const {
    ChartForm r(nvars_, degree_);
    for (const auto& [mask, p] : terms_) r.add_term(mask, f(p));
    return r;
  }

  std::string to_string() const;

 private:
  int nvars_;
  int degree_;
  Terms terms_;
};

/// Sign of dz_a ^ dz_b relative to dz_{a|b}; 0 when a and b overlap.
int wedge_sign(std::uint32_t a, std::uint32_t b);

ChartForm wedge(const ChartForm& u, const ChartForm& v);
ChartForm exterior_derivative(const ChartForm& u);
/// Contraction with the vector field whose dz_i-component is field[i].
ChartForm contract(const ChartForm& u, std::span<const Polynomial> field);
/// Pullback along z_i = images[i](w); the result lives on the variables w.
ChartForm pullback(const ChartForm& u, std::span<const Polynomial> images);

/// Tangent vector of a simplex as a formal combination sum c_v x_v with
/// sum c_v = 0; dlambda_w applied to it is c_w.
class TangentVector {
 public:
  TangentVector(IndexSet vertices, std::vector<Rational> coeffs);
  /// x_to - x_from.
  static TangentVector edge(const IndexSet& vertices, int from, int to);

  const IndexSet& vertices() const { return vertices_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int label) const;

 private:
  IndexSet vertices_;
  std::vector<Rational> coeffs_;
};

/// Polynomial k-form on the simplex with vertex set V. Components use the
/// anchor-eliminated basis {dlambda_v : v in V, v != anchor}.
class PolyForm {
 public:
  PolyForm(IndexSet vertices, int k);
  PolyForm(IndexSet vertices, ChartForm chart);

  static PolyForm scalar(const BaryPoly& p);
  static PolyForm constant(const IndexSet& vertices, const Rational& c);
  static PolyForm lambda(const IndexSet& vertices, int label);
  static PolyForm dlambda(const IndexSet& vertices, int label);

  const IndexSet& vertices() const { return vertices_; }
  int degree() const { return chart_.degree(); }
  const ChartForm& chart() const { return chart_; }
  bool is_zero() const { return chart_.is_zero(); }
  /// Coefficient of dlambda_sigma; sigma given as increasing non-anchor labels.
  BaryPoly component(const std::vector<int>& sigma) const;
  /// Max degree over the components; nullopt for the zero form.
  std::optional<int> poly_degree() const;

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  PolyForm& operator*=(const Rational& c);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(PolyForm a, const Rational& c) { return a *= c; }
  friend PolyForm operator*(const Rational& c, PolyForm a) { return a *= c; }
  PolyForm operator-() const { return PolyForm(vertices_, -chart_); }
  bool operator==(const PolyForm& o) const = default;

  std::string to_string() const;

 private:
  IndexSet vertices_;
  ChartForm chart_;
};

PolyForm wedge(const PolyForm& u, const PolyForm& v);
/// Product of a scalar polynomial with a form.
PolyForm multiply(const BaryPoly& p, const PolyForm& u);
PolyForm exterior_derivative(const PolyForm& u);

/// Contraction with a constant vector. Throws DegreeMismatch for 0-forms.
PolyForm contract(const PolyForm& u, const TangentVector& w);
/// Contraction with the affine Koszul field x - a.
PolyForm contract_koszul(const PolyForm& u, const RationalPoint& a);
/// Contraction with x - x_anchor, the Koszul field based at the anchor vertex.
PolyForm contract_koszul_anchor(const PolyForm& u);

/// Pullback along the inclusion of the face with vertex set W.
PolyForm trace(const PolyForm& u, const IndexSet& face);

/// Barycentric-affine map between simplices, given by the image of every
/// target barycentric coordinate as a degree <= 1 polynomial on the source.
struct AffineMap {
  IndexSet source;
  IndexSet target;
  std::vector<BaryPoly> images;  // one per target vertex, in target order
};

/// Checks the images sum to one (ParseError otherwise), have degree <= 1 and
/// are nonnegative on the source (OutOfDomain otherwise).
void validate(const AffineMap& g);
PolyForm pullback_affine(const AffineMap& g, const PolyForm& u);

/// Whitney form phi_J on the simplex V; J ordered, J subset of V.
PolyForm whitney(const IndexSet& vertices, const IndexSet& J);
/// (delta phi)_J = sum_i (-1)^i phi_{J(i^)}; needs |J| >= 2.
PolyForm delta_whitney(const IndexSet& vertices, const IndexSet& J);

/// Integral of an s-form over the oriented simplex [x_J], |J| = s+1.
Rational integrate_over(const PolyForm& u, const IndexSet& J);

/// Exact value u_x(v_1, ..., v_k).
Rational form_eval(const PolyForm& u, const RationalPoint& x, std::span<const TangentVector> vs);

/// Determinant of a small square matrix of rationals (row-major).
Rational determinant(std::vector<Rational> m, int size);

}  // namespace cochain
