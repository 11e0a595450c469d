#pragma once

#include "cochain/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cochain {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Exponent vectors are packed 8 bits per variable into a 64-bit word with
/// variable 0 in the most significant byte, so integer order of the packed
/// words is lexicographic monomial order. Terms are kept sorted by that order
/// with no zero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  using Monomial = std::uint64_t;
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExponent = 255;

  struct Term {
    Monomial mono;
    Rational coeff;
  };

  explicit Polynomial(int nvars = 0);

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int var);
  /// One minus the sum of all variables: the eliminated coordinate of a chart.
  static Polynomial one_minus_sum(int nvars);
  static Polynomial from_terms(int nvars, std::vector<Term> terms);

  static Monomial pack(std::span<const int> exponents);
  static int exponent(Monomial m, int var) {
    return static_cast<int>((m >> (8 * (kMaxVars - 1 - var))) & 0xffu);
  }
  static Monomial unit(int var) { return Monomial{1} << (8 * (kMaxVars - 1 - var)); }
  static int total_degree(Monomial m);
  static bool divides(Monomial a, Monomial b);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  const std::vector<Term>& terms() const { return terms_; }
  Rational coefficient(Monomial m) const;
  Rational constant_term() const { return coefficient(0); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  bool operator==(const Polynomial& o) const;

  Polynomial pow(unsigned e) const;
  Polynomial derivative(int var) const;
  /// Homogeneous component of the given total degree.
  Polynomial homogeneous_part(int degree) const;
  Rational evaluate(std::span<const Rational> x) const;

  /// Replaces variable i by images[i]; every image must share one variable
  /// count, which becomes the variable count of the result.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Reinterprets the polynomial in a larger variable space; variable i maps
  /// to variable i + offset.
  Polynomial embed(int new_nvars, int offset = 0) const;

  std::string to_string() const;

 private:
  void add_scaled(const Polynomial& o, int sign);

  int nvars_;
  std::vector<Term> terms_;
};

/// Exact quotient p / q. Throws NotDivisible if q does not divide p, and
/// DimensionMismatch if the variable counts differ.
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);

/// Integral of t_1^{b_1}...t_s^{b_s} over the unit s-simplex
/// {t_i >= 0, sum t_i <= 1}: prod(b_i!) / (s + sum b_i)!.
Rational simplex_monomial_integral(std::span<const int> exponents);

}  // namespace cochain
