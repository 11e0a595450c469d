#include "cochain/extension.hpp"

#include "cochain/errors.hpp"

#include <algorithm>

namespace cochain {

namespace {

BoundaryForm derivative_or_zero(const BoundaryForm& u) {
  if (u.degree() >= u.n()) return BoundaryForm(u.n(), u.n());
  return exterior_derivative(u);
}

Rational lambda_at(const IndexSet& I, const RationalPoint& x) {
  Rational v = 0;
  for (int i : I) v += x[i];
  return v;
}

}  // namespace

Extender::Extender(BoundaryForm u)
    : u_(std::move(u)),
      du_(derivative_or_zero(u_)),
      n_(u_.n()),
      k_(u_.degree()),
      full_(IndexSet::full(n_)),
      ops_u_(u_),
      ops_du_(du_) {
  if (k_ > n_ - 1) throw DegreeMismatch("extension needs boundary data of degree <= n-1");
}

PolyForm Extender::q_sum(BlendingOperators& ops, const IndexSet& I, int ell) {
  const int k = ops.degree();
  if (k == 0) return PolyForm(full_, 0);
  PolyForm out(full_, k - 1);
  for (int s = 1; s <= std::min({ell, I.size() - 1, n_ - 1}); ++s)
    for (const auto& J : enumerate_gamma_sub(I, s)) {
      PolyForm term = wedge(delta_whitney(full_, J), ops.a_div(I, J));
      out += term * Rational(1, s);
    }
  return out;
}

PolyForm Extender::q(const IndexSet& I, int ell) { return q_sum(ops_u_, I, ell); }

PolyForm Extender::q_derivative(const IndexSet& I, int ell) { return q_sum(ops_du_, I, ell); }

PolyForm Extender::ladder_tail(const IndexSet& I, int ell) {
  PolyForm out(full_, k_);
  if (ell + 1 > I.size() - 1) return out;
  for (const auto& J : enumerate_gamma_sub(I, ell + 1)) {
    const PolyForm quotient = ops_u_.divide_by_lambda(ops_u_.delta_a(I, J), I, ell + 1, J);
    out += wedge(delta_whitney(full_, J), quotient);
  }
  return out;
}

PolyForm Extender::component(const IndexSet& I) {
  const int m = I.size() - 1;
  PolyForm sum(full_, k_);
  for (int j : I) sum += ops_u_.r(I, IndexSet(n_, {j}));
  if (k_ > 0) sum += exterior_derivative(q(I, k_));
  sum += q_derivative(I, k_);
  sum += ladder_tail(I, k_);
  return sum * Rational(1, m + 1);
}

PolyForm Extender::component_closed(const IndexSet& I) {
  const int m = I.size() - 1;
  PolyForm sum(full_, k_);
  for (int j : I) sum += ops_u_.r(I, IndexSet(n_, {j}));
  if (k_ > 0) sum += exterior_derivative(q(I, k_));
  sum += q_derivative(I, k_ + 1);
  return sum * Rational(1, m + 1);
}

PolyForm Extender::extend() {
  PolyForm total(full_, k_);
  for (int m = 1; m <= n_; ++m)
    for (const auto& I : enumerate_gamma(n_, m)) {
      const PolyForm c = component(I);
      if (m % 2)
        total += c;
      else
        total -= c;
    }
  return total * Rational(1, n_);
}

std::pair<Rational, Rational> Extender::ladder(const IndexSet& I, int ell, const RationalPoint& x,
                                               std::span<const TangentVector> vs) {
  if (ell < 0 || ell > k_) throw InvalidIndexSet("ladder level must satisfy 0 <= l <= k");
  if (!x.strictly_inside()) throw OutOfDomain("ladder evaluation needs a strictly interior point");
  const int m = I.size() - 1;
  const Rational lam = lambda_at(I, x);

  Rational truncated = 0;
  Rational power = lam;
  for (int s = 0; s <= std::min(ell, m); ++s, power *= lam)
    for (const auto& J : enumerate_gamma_sub(I, s))
      truncated += form_eval(wedge(whitney(full_, J), ops_u_.a(I, J)), x, vs) / power;

  Rational rhs = 0;
  for (int j : I) rhs += form_eval(ops_u_.r(I, IndexSet(n_, {j})), x, vs);
  if (k_ > 0) rhs += form_eval(exterior_derivative(q(I, ell)), x, vs);
  rhs += form_eval(q_derivative(I, ell), x, vs);
  if (ell + 1 <= m) {
    Rational lam_power = 1;
    for (int e = 0; e <= ell; ++e) lam_power *= lam;
    for (const auto& J : enumerate_gamma_sub(I, ell + 1))
      rhs += form_eval(wedge(delta_whitney(full_, J), ops_u_.delta_a(I, J)), x, vs) / lam_power;
  }
  rhs /= m + 1;
  return {truncated, rhs};
}

PolyForm q_op(const IndexSet& I, const BoundaryForm& u) {
  Extender e(u);
  return e.q(I, u.degree());
}

PolyForm extend_component(const IndexSet& I, const BoundaryForm& u) {
  Extender e(u);
  return e.component(I);
}

PolyForm extend(const BoundaryForm& u) {
  require_compatible(u);
  Extender e(u);
  return e.extend();
}

TopDiagnostic d_top_diagnostic(const BoundaryForm& u) {
  if (u.degree() != u.n() - 1) throw DegreeMismatch("the top-degree diagnostic needs (n-1)-form data");
  const int n = u.n();
  PolyForm de = exterior_derivative(extend(u));
  const Rational volume = integrate_volume(de);
  const Rational boundary = boundary_integral(u);
  const PolyForm candidate = whitney(IndexSet::full(n), IndexSet::full(n)) * (factorial(static_cast<unsigned>(n)) * boundary);
  const bool zero = de.is_zero();
  const bool matches = de == candidate;
  return TopDiagnostic{std::move(de), volume, boundary, zero, matches};
}

}  // namespace cochain
