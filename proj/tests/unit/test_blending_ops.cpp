#include "helpers.hpp"

#include "cochain/blending.hpp"
#include "cochain/errors.hpp"
#include "cochain/oracle.hpp"

using namespace cochain;
using testing::constant;
using testing::dlam;
using testing::lam;
using testing::q;

namespace {

const IndexSet tri = IndexSet::full(2);

IndexSet S(int n, std::initializer_list<int> l) { return IndexSet(n, l); }

BoundaryForm constant_data(int n) {
  return boundary_trace(constant(n, 1));
}

}  // namespace

TEST_CASE("projection maps", "[blending]") {
  const AffineMap all = proj_map(2, tri, 2);
  CHECK(all.images[0].is_zero());
  CHECK(all.images[1].is_zero());
  CHECK(all.images[2] == BaryPoly::constant(tri, 1));

  const AffineMap g = proj_map(2, S(2, {0, 1}), 0);
  CHECK(g.images[0] == BaryPoly::lambda(tri, 0) + BaryPoly::lambda(tri, 1));
  CHECK(g.images[1].is_zero());
  CHECK(g.images[2] == BaryPoly::lambda(tri, 2));

  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= n; ++m)
      for (const auto& I : enumerate_gamma(n, m))
        for (int j : I) {
          std::vector<int> rest;
          for (int i : I)
            if (i != j) rest.push_back(i);
          const AffineMap a = proj_map(n, I, j), b = proj_map(n, IndexSet(n, rest), j);
          CHECK(a.images == b.images);
        }
}

TEST_CASE("projection pullbacks", "[blending]") {
  CHECK(proj_pullback(S(2, {0, 1}), 2, FormData(constant_data(2))) == constant(2, 1));
  const BoundaryForm ends(1, 0,
                          {PolyForm::constant(facet_vertices(1, 0), 4), PolyForm::constant(facet_vertices(1, 1), 9)});
  CHECK(proj_pullback(S(1, {0, 1}), 0, FormData(ends)) == constant(1, 9));
  CHECK(proj_pullback(S(1, {0, 1}), 1, FormData(ends)) == constant(1, 4));
  CHECK(proj_pullback(S(2, {0, 1}), 0, FormData(boundary_trace(lam(2, 2)))) == lam(2, 2));
  CHECK_THROWS_AS(proj_pullback(S(2, {1}), 1, FormData(constant_data(2))), OutOfDomain);
}

TEST_CASE("product pullback from the full index set only has fiber part", "[blending]") {
  for (int k = 0; k <= 1; ++k)
    for (const auto& u : basis_full(2, 2, k))
      for (int s = 0; s <= 2; ++s)
        for (const auto& J : enumerate_gamma(2, s)) {
          const ProductForm p = product_pullback(tri, J, FormData(u));
          for (int t = 0; t <= std::min(s, p.form.degree()); ++t)
            if (t != k) CHECK(p.bidegree(t).is_zero());
        }
}

TEST_CASE("R from the full index set integrates over the fiber", "[blending]") {
  for (const auto& u : basis_full(2, 2, 1)) {
    const BoundaryForm b = boundary_trace(u);
    for (const auto& J : enumerate_gamma(2, 1)) {
      const Rational line = integrate_over(u, J);
      CHECK(r_op(tri, J, FormData(b)) == PolyForm::constant(tri, line));
      CHECK(r_op(tri, J, FormData(u)) == PolyForm::constant(tri, line));
    }
  }
}

TEST_CASE("R is alternating in J and vanishes in top degree", "[blending]") {
  const FormData u(boundary_trace(wedge(lam(2, 0), dlam(2, 1)) + dlam(2, 2) * q(3)));
  const IndexSet I = S(2, {0, 2});
  CHECK(r_op(I, S(2, {1, 0}), u) == -r_op(I, S(2, {0, 1}), u));
  CHECK(r_op(I, S(2, {2, 1}), u) == -r_op(I, S(2, {1, 2}), u));
  for (const auto& w : basis_full(2, 2, 2))
    for (int m = 0; m <= 2; ++m)
      for (const auto& I2 : enumerate_gamma(2, m))
        for (int s = 0; s <= 2; ++s)
          for (const auto& J : enumerate_gamma(2, s))
            if (I2.mask() & ~J.mask()) CHECK(r_op(I2, J, FormData(w)).is_zero());
}

TEST_CASE("R divided by powers of lambda_I", "[blending]") {
  BlendingOperators ops{FormData(dlam(2, 1))};
  for (int m = 1; m <= 2; ++m)
    for (const auto& I : enumerate_gamma(2, m)) {
      for (int j = 0; j <= 2; ++j) CHECK(ops.r_div(I, S(2, {j})) == ops.r(I, S(2, {j})));
    }
  for (const auto& J : enumerate_gamma(2, 1)) CHECK(ops.r_div(tri, J) == ops.r(tri, J));
  const PolyForm quotient = ops.r_div(S(2, {0, 1}), S(2, {0, 1}));
  CHECK(quotient.degree() == 0);
  CHECK(quotient.poly_degree().value_or(0) <= 1);
  const PolyForm lambda01 = PolyForm::scalar(BaryPoly::lambda_sum(tri, S(2, {0, 1})));
  CHECK(wedge(lambda01, quotient) == ops.r(S(2, {0, 1}), S(2, {0, 1})));
}

TEST_CASE("division failures are reported", "[blending][errors]") {
  BlendingOperators ops{FormData(boundary_trace(dlam(2, 1)))};
  const PolyForm not_multiple = lam(2, 2);
  CHECK_THROWS_AS(ops.divide_by_lambda(not_multiple, S(2, {0, 1}), 1, S(2, {0, 1})), NotDivisible);
  CHECK(ops.divide_by_lambda(wedge(lam(2, 0) + lam(2, 1), not_multiple), S(2, {0, 1}), 1, S(2, {0, 1})) ==
        not_multiple);
}

TEST_CASE("alternating differences of R", "[blending]") {
  for (const auto& u : basis_full(2, 2, 1)) {
    BlendingOperators ops{FormData(boundary_trace(u))};
    for (int m = 1; m <= 2; ++m)
      for (const auto& I : enumerate_gamma(2, m))
        for (const auto& J : enumerate_gamma(2, 1))
          CHECK(ops.delta_r(I, J) == ops.r(I, S(2, {J[1]})) - ops.r(I, S(2, {J[0]})));
    CHECK(ops.delta_r(tri, tri) == PolyForm::constant(tri, boundary_integral(boundary_trace(u))));
    // delta delta = 0
    for (int m = 1; m <= 2; ++m)
      for (const auto& I : enumerate_gamma(2, m)) {
        PolyForm total(tri, 1);
        for (int a = 0; a < 3; ++a) {
          const PolyForm part = ops.delta_r(I, remove_at(tri, a));
          total += a % 2 ? -part : part;
        }
        CHECK(total.is_zero());
      }
  }
}

TEST_CASE("blending constants", "[blending]") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 4; ++k) CHECK(c_const(0, n, k) == -1);
  for (int n = 2; n <= 6; ++n) CHECK(c_const(1, n, 1) == Rational(1, n - 1));
  CHECK(c_const(2, 3, 2) == -2);
  CHECK_THROWS_AS(c_const(3, 3, 1), InvalidIndexSet);
  CHECK_THROWS_AS(c_const(-1, 3, 1), InvalidIndexSet);
}

TEST_CASE("A operators", "[blending]") {
  for (const auto& u : basis_trimmed(2, 2, 1)) {
    const FormData b(boundary_trace(u));
    BlendingOperators ops(b);
    for (int m = 1; m <= 2; ++m)
      for (const auto& I : enumerate_gamma(2, m)) {
        for (int j : I) CHECK(ops.a(I, S(2, {j})) == proj_pullback(I, j, b));
        for (const auto& J : enumerate_gamma_sub(I, 1)) {
          CHECK(ops.delta_a(I, J) == ops.a(I, S(2, {J[1]})) - ops.a(I, S(2, {J[0]})));
          CHECK(ops.delta_a(I, J) == ops.delta_r(I, J) * (-1 * c_const(0, 2, 1)));
          PolyForm alt(tri, 0);
          for (int p = 0; p <= 2; ++p)
            if (!J.contains(p)) alt += ops.r(I, S(2, {p, J[1]})) - ops.r(I, S(2, {p, J[0]}));
          CHECK(ops.a(I, J) == alt * Rational(1, 2 - 1));
        }
      }
    CHECK(ops.delta_a(tri, tri) == PolyForm::constant(tri, -2 * boundary_integral(boundary_trace(u))));
  }
}

TEST_CASE("A vanishes on top-degree forms", "[blending]") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& w : basis_full(n, 1, n)) {
      BlendingOperators ops{FormData(w)};
      for (int m = 1; m <= n; ++m)
        for (const auto& I : enumerate_gamma(n, m))
          for (int s = 0; s <= std::min(m, n - 1); ++s)
            for (const auto& J : enumerate_gamma_sub(I, s)) CHECK(ops.a(I, J).is_zero());
    }
}

TEST_CASE("A needs J inside I", "[blending][errors]") {
  BlendingOperators ops{FormData(boundary_trace(dlam(3, 1)))};
  CHECK_THROWS_AS(ops.a(S(3, {0, 1}), S(3, {0, 2})), InvalidIndexSet);
}

TEST_CASE("pointwise R agrees with the symbolic operator", "[blending][oracle]") {
  const auto points = testing::sample_points(2, 3, 7);
  for (int k = 0; k <= 1; ++k)
    for (const auto& u : basis_trimmed(2, 2, k)) {
      const BoundaryForm b = boundary_trace(u);
      BlendingOperators ops{FormData(b)};
      const std::vector<TangentVector> vs{TangentVector(tri, {q(1), q(-3), q(2)})};
      for (const auto& x : points)
        for (int m = 0; m <= 2; ++m)
          for (const auto& I : enumerate_gamma(2, m))
            for (int s = 0; s <= k; ++s)
              for (const auto& K : enumerate_gamma(2, s)) {
                if (!(I.mask() & ~K.mask())) continue;
                const std::span<const TangentVector> ws(vs.data(), static_cast<std::size_t>(k - s));
                CHECK(form_eval(ops.r(I, K), x, ws) == r_eval_oracle(b, I, K, x, ws));
              }
    }
}
