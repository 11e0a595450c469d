#pragma once

#include "cochain/blending.hpp"
#include "cochain/boundary.hpp"

#include <span>
#include <utility>

namespace cochain {

/// Extension of one boundary form u of degree k <= n-1, assembled per index
/// set I from polynomial pieces. Holds memoized operator values for u and du;
/// not safe to share between threads.
class Extender {
 public:
  explicit Extender(BoundaryForm u);

  int n() const { return n_; }
  int degree() const { return k_; }
  const BoundaryForm& data() const { return u_; }
  const BoundaryForm& derivative() const { return du_; }
  BlendingOperators& ops() { return ops_u_; }
  BlendingOperators& ops_derivative() { return ops_du_; }

  /// Q_l^k u = sum_{1<=s<=l} sum_{J in Gamma_s(I)} (1/s) (delta phi)_J ^ lambda_I^{-s} A_{I,J}^k u.
  /// Returns the zero 0-form when k = 0.
  PolyForm q(const IndexSet& I, int ell);
  /// The same sum applied to du (degree k+1 data).
  PolyForm q_derivative(const IndexSet& I, int ell);

  /// E_n^k(I) u as a polynomial form, through the truncation level l = k of
  /// the ladder representation.
  PolyForm component(const IndexSet& I);
  /// (1/(m+1)) [sum_j P_{I,j}^* u + d Q_k^k u + Q_{k+1}^{k+1} du]. Agrees with
  /// component() for k <= n-2.
  PolyForm component_closed(const IndexSet& I);

  /// E_n^k u = (1/n) sum_{1<=m<=n} sum_{I in Gamma_m} (-1)^{m+1} E_n^k(I) u.
  PolyForm extend();

  /// Pointwise values of the truncated sum E_{n,l}^k(I) u and of its ladder
  /// representation at a strictly interior point.
  std::pair<Rational, Rational> ladder(const IndexSet& I, int ell, const RationalPoint& x,
                                       std::span<const TangentVector> vs);

 private:
  PolyForm q_sum(BlendingOperators& ops, const IndexSet& I, int ell);
  PolyForm ladder_tail(const IndexSet& I, int ell);

  BoundaryForm u_;
  BoundaryForm du_;
  int n_;
  int k_;
  IndexSet full_;
  BlendingOperators ops_u_;
  BlendingOperators ops_du_;
};

/// Q_n^k(I) u.
PolyForm q_op(const IndexSet& I, const BoundaryForm& u);
PolyForm extend_component(const IndexSet& I, const BoundaryForm& u);
/// Checks compatibility (IncompatibleTraces) and k <= n-1 (DegreeMismatch).
PolyForm extend(const BoundaryForm& u);

struct TopDiagnostic {
  PolyForm d_extension;
  Rational volume_integral;
  Rational boundary_integral;
  bool d_is_zero;
  /// d E u == n! (boundary integral) phi_{0..n}.
  bool matches_volume_form;
};

/// d E_n^{n-1} u together with both sides of Stokes' theorem.
TopDiagnostic d_top_diagnostic(const BoundaryForm& u);

}  // namespace cochain
