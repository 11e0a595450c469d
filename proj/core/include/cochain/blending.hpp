#pragma once

#include "cochain/boundary.hpp"
#include "cochain/forms.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <variant>

namespace cochain {

/// Input of the blending operators: an interior form on the full simplex or
/// boundary data.
using FormData = std::variant<PolyForm, BoundaryForm>;

int data_dimension(const FormData& u);
int data_degree(const FormData& u);

/// The projection P_{I,j} as a barycentric-affine self map of {0..n}.
AffineMap proj_map(int n, const IndexSet& I, int j);

/// P_{I,j}^* u. For boundary data the facet omitting min(I \ {j}) is used;
/// throws OutOfDomain when I \ {j} is empty.
PolyForm proj_pullback(const IndexSet& I, int j, const FormData& u);

/// F_I^* u on S_n x [x_J]. Variables 0..n-1 are the base chart coordinates
/// lambda_1..lambda_n; variables n..n+s-1 are the fiber coordinates t_1..t_s
/// of y = sum_a t_a x_{J_a}, t_0 = 1 - sum t_a.
struct ProductForm {
  int base_vars;
  IndexSet fiber;
  ChartForm form;

  /// The part with exactly s fiber differentials.
  ChartForm bidegree(int s) const;
};

ProductForm product_pullback(const IndexSet& I, const IndexSet& J, const FormData& u);

/// c_{s,n}^k. Throws InvalidIndexSet unless 0 <= s <= n-1.
Rational c_const(int s, int n, int k);

/// R, A and their alternating differences for one fixed input u, with
/// results memoized per (I, J). Not safe to share between threads.
///
/// Forms whose degree k - s would be negative are returned as the zero
/// 0-form.
class BlendingOperators {
 public:
  explicit BlendingOperators(FormData u);

  int n() const { return n_; }
  int degree() const { return k_; }
  const FormData& data() const { return data_; }

  /// R_{I,J}^k u for an ordered J.
  PolyForm r(const IndexSet& I, const IndexSet& J);
  /// lambda_I^{-s} R_{I,J}^k u; throws NotDivisible if the quotient is not
  /// polynomial.
  PolyForm r_div(const IndexSet& I, const IndexSet& J);
  /// sum_i (-1)^i R_{I,J(i^)}^k u.
  PolyForm delta_r(const IndexSet& I, const IndexSet& J);

  /// A_{I,J}^k u for J contained in I.
  PolyForm a(const IndexSet& I, const IndexSet& J);
  PolyForm a_div(const IndexSet& I, const IndexSet& J);
  /// sum_i (-1)^i A_{I,J(i^)}^k u.
  PolyForm delta_a(const IndexSet& I, const IndexSet& J);

  /// lambda_I^e in the chart of the full simplex.
  const Polynomial& lambda_power(const IndexSet& I, int e);
  /// Exact quotient f / lambda_I^e; J only labels the error message.
  PolyForm divide_by_lambda(const PolyForm& f, const IndexSet& I, int e, const IndexSet& J);

 private:
  using Key = std::pair<std::uint32_t, std::uint32_t>;

  void check_I(const IndexSet& I) const;
  PolyForm zero_form(int degree) const;
  const PolyForm& r_sorted(const IndexSet& I, const IndexSet& J);
  const PolyForm& r_div_sorted(const IndexSet& I, const IndexSet& J);
  const PolyForm& a_sorted(const IndexSet& I, const IndexSet& J);
  const PolyForm& a_div_sorted(const IndexSet& I, const IndexSet& J);

  FormData data_;
  int n_;
  int k_;
  IndexSet full_;
  std::map<Key, PolyForm> r_cache_;
  std::map<Key, PolyForm> r_div_cache_;
  std::map<Key, PolyForm> a_cache_;
  std::map<Key, PolyForm> a_div_cache_;
  std::map<std::pair<std::uint32_t, int>, Polynomial> lambda_cache_;
};

PolyForm r_op(const IndexSet& I, const IndexSet& J, const FormData& u);
PolyForm r_div(const IndexSet& I, const IndexSet& J, const FormData& u);
PolyForm delta_r(const IndexSet& I, const IndexSet& J, const FormData& u);
PolyForm a_op(const IndexSet& I, const IndexSet& J, const FormData& u);
PolyForm a_div(const IndexSet& I, const IndexSet& J, const FormData& u);
PolyForm delta_a(const IndexSet& I, const IndexSet& J, const FormData& u);

}  // namespace cochain
