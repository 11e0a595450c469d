#include "cochain/oracle.hpp"

#include "cochain/blending.hpp"
#include "cochain/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>

namespace cochain {

namespace {

using PolyVector = std::vector<Polynomial>;  // one entry per label 0..n

// Leibniz expansion; m[r][c], size k.
Polynomial leibniz_det(const std::vector<PolyVector>& m, int k, int nvars) {
  if (k == 0) return Polynomial::constant(nvars, 1);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(nvars);
  do {
    Polynomial prod = Polynomial::constant(nvars, permutation_sign(perm));
    for (int r = 0; r < k && !prod.is_zero(); ++r)
      prod = prod * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])];
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Rational leibniz_det(const std::vector<std::vector<Rational>>& m, int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  Rational det = 0;
  do {
    Rational prod = permutation_sign(perm);
    for (int r = 0; r < k; ++r)
      prod *= m[static_cast<std::size_t>(r)][static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])];
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Rational integrate_simplex(const Polynomial& p, int s) {
  Rational total = 0;
  std::vector<int> exps(static_cast<std::size_t>(s));
  for (const auto& t : p.terms()) {
    for (int a = 0; a < s; ++a) exps[static_cast<std::size_t>(a)] = Polynomial::exponent(t.mono, a);
    total += t.coeff * simplex_monomial_integral(exps);
  }
  return total;
}

// phi_J(x)(vs), directly from lambda_{j_i}(x) and the minors of [dlambda_{j_a}(v_b)].
Rational whitney_value(const IndexSet& J, const RationalPoint& x, const std::vector<const TangentVector*>& vs) {
  const int s = J.size() - 1;
  Rational total = 0;
  for (int i = 0; i <= s; ++i) {
    std::vector<std::vector<Rational>> m;
    for (int a = 0; a <= s; ++a) {
      if (a == i) continue;
      std::vector<Rational> row;
      for (const auto* v : vs) row.push_back((*v)[J[a]]);
      m.push_back(std::move(row));
    }
    const Rational term = x[J[i]] * (s == 0 ? Rational(1) : leibniz_det(m, s));
    total += i % 2 ? -term : term;
  }
  return total;
}

class OracleEvaluator {
 public:
  OracleEvaluator(const BoundaryForm& u, const RationalPoint& x) : u_(u), x_(x), n_(u.n()), k_(u.degree()) {}

  Rational r(const IndexSet& I, const IndexSet& K, const std::vector<const TangentVector*>& ws) {
    const int s = K.size() - 1;
    if (s > k_) return 0;
    if (static_cast<int>(ws.size()) != k_ - s) throw DegreeMismatch("R_{I,K} needs k - s vectors");
    int facet = -1;
    for (int i : I)
      if (!K.contains(i)) {
        facet = i;
        break;
      }
    if (facet < 0) throw OutOfDomain("F_I does not map into the boundary for this I, K");

    Rational lam = 0;
    for (int i : I) lam += x_[i];
    PolyVector y(static_cast<std::size_t>(n_ + 1), Polynomial(s));
    Polynomial t0 = Polynomial::constant(s, 1);
    for (int a = 1; a <= s; ++a) {
      y[static_cast<std::size_t>(K[a])] = Polynomial::variable(s, a - 1);
      t0 -= y[static_cast<std::size_t>(K[a])];
    }
    y[static_cast<std::size_t>(K[0])] = t0;

    PolyVector mu(static_cast<std::size_t>(n_ + 1));
    for (int v = 0; v <= n_; ++v) {
      mu[static_cast<std::size_t>(v)] = y[static_cast<std::size_t>(v)] * lam;
      if (!I.contains(v)) mu[static_cast<std::size_t>(v)] += Polynomial::constant(s, x_[v]);
    }

    // Push-forward of every argument, as barycentric increments depending on t.
    std::vector<PolyVector> vectors;
    for (const auto* w : ws) {
      Rational w_I = 0;
      for (int i : I) w_I += (*w)[i];
      PolyVector c(static_cast<std::size_t>(n_ + 1));
      for (int v = 0; v <= n_; ++v) {
        c[static_cast<std::size_t>(v)] = y[static_cast<std::size_t>(v)] * w_I;
        if (!I.contains(v)) c[static_cast<std::size_t>(v)] += Polynomial::constant(s, (*w)[v]);
      }
      vectors.push_back(std::move(c));
    }
    for (int a = 1; a <= s; ++a) {
      PolyVector e(static_cast<std::size_t>(n_ + 1), Polynomial(s));
      e[static_cast<std::size_t>(K[a])] += Polynomial::constant(s, lam);
      e[static_cast<std::size_t>(K[0])] -= Polynomial::constant(s, lam);
      vectors.push_back(std::move(e));
    }

    const PolyForm& g = u_.facet(facet);
    const auto& labels = g.vertices().labels();
    std::vector<Polynomial> images;
    for (std::size_t i = 1; i < labels.size(); ++i) images.push_back(mu[static_cast<std::size_t>(labels[i])]);

    Polynomial integrand(s);
    for (const auto& [mask, p] : g.chart().terms()) {
      std::vector<PolyVector> m;
      for (std::size_t var = 0; var + 1 < labels.size(); ++var) {
        if (!(mask & (1u << var))) continue;
        PolyVector row;
        for (const auto& vec : vectors) row.push_back(vec[static_cast<std::size_t>(labels[var + 1])]);
        m.push_back(std::move(row));
      }
      const Polynomial coeff = images.empty() ? Polynomial::constant(s, p.constant_term()) : p.substitute(images);
      integrand += coeff * leibniz_det(m, k_, s);
    }
    return integrate_simplex(integrand, s);
  }

  Rational a(const IndexSet& I, const IndexSet& J, const std::vector<const TangentVector*>& ws) {
    const int s = J.size() - 1;
    if (s == 0) return r(I, J, ws);
    Rational total = 0;
    for (int p = 0; p <= n_; ++p) {
      if (J.contains(p)) continue;
      for (int i = 0; i <= s; ++i) {
        const Rational term = r(I, prepend(p, remove_at(J, i)), ws);
        total += i % 2 ? -term : term;
      }
    }
    return c_const(s, n_, k_) * total;
  }

 private:
  const BoundaryForm& u_;
  const RationalPoint& x_;
  int n_;
  int k_;
};

}  // namespace

Rational r_eval_oracle(const BoundaryForm& u, const IndexSet& I, const IndexSet& K, const RationalPoint& x,
                       std::span<const TangentVector> ws) {
  std::vector<const TangentVector*> ptrs;
  for (const auto& w : ws) ptrs.push_back(&w);
  OracleEvaluator eval(u, x);
  return eval.r(I, K, ptrs);
}

Rational extend_eval_oracle(const BoundaryForm& u, const RationalPoint& x, std::span<const TangentVector> vs) {
  const int n = u.n();
  const int k = u.degree();
  if (k > n - 1) throw DegreeMismatch("extension needs boundary data of degree <= n-1");
  if (static_cast<int>(vs.size()) != k) throw DegreeMismatch("a k-form needs k vectors");
  if (x.vertices().labels() != IndexSet::full(n).labels())
    throw DimensionMismatch("evaluation point must live on the full simplex");
  if (!x.strictly_inside()) throw OutOfDomain("the rational formula needs a strictly interior point");

  OracleEvaluator eval(u, x);
  Rational total = 0;
  for (int m = 1; m <= n; ++m)
    for (const auto& I : enumerate_gamma(n, m)) {
      Rational lam = 0;
      for (int i : I) lam += x[i];
      Rational part = 0;
      Rational power = lam;
      for (int s = 0; s <= std::min(k, m); ++s, power *= lam) {
        // Shuffles: positions P feed phi_J, the rest feed A_{I,J}.
        std::vector<int> order(static_cast<std::size_t>(k));
        for (std::uint32_t pmask = 0; pmask < (1u << k); ++pmask) {
          if (std::popcount(pmask) != s) continue;
          std::vector<const TangentVector*> vp, vq;
          std::size_t pos = 0;
          for (int b = 0; b < k; ++b)
            if (pmask & (1u << b)) {
              vp.push_back(&vs[static_cast<std::size_t>(b)]);
              order[pos++] = b;
            }
          for (int b = 0; b < k; ++b)
            if (!(pmask & (1u << b))) {
              vq.push_back(&vs[static_cast<std::size_t>(b)]);
              order[pos++] = b;
            }
          const int sign = permutation_sign(order);
          for (const auto& J : enumerate_gamma_sub(I, s)) {
            const Rational phi = whitney_value(J, x, vp);
            if (phi == 0) continue;
            part += sign * phi * eval.a(I, J, vq) / power;
          }
        }
      }
      total += m % 2 ? part : -part;
    }
  return total / n;
}

}  // namespace cochain
