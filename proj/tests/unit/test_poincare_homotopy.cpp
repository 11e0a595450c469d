#include "helpers.hpp"

#include "cochain/errors.hpp"
#include "cochain/extension.hpp"
#include "cochain/poincare.hpp"

using namespace cochain;
using testing::constant;
using testing::dlam;
using testing::lam;
using testing::q;

TEST_CASE("Poincare operator on coordinate differentials", "[homotopy]") {
  for (int n = 1; n <= 3; ++n) {
    const RationalPoint a = RationalPoint::barycenter(IndexSet::full(n));
    CHECK(poincare(dlam(n, 1), a) == lam(n, 1) - constant(n, 1) * Rational(1, n + 1));
  }
  CHECK_THROWS_AS(poincare(lam(2, 1), RationalPoint::barycenter(IndexSet::full(2))), DegreeMismatch);
}

TEST_CASE("closed forms are exact", "[homotopy]") {
  const RationalPoint a(IndexSet::full(2), {q(1, 5), q(2, 5), q(2, 5)});
  const PolyForm area = wedge(dlam(2, 1), dlam(2, 2));
  const PolyForm qa = poincare(area, a);
  CHECK(exterior_derivative(qa) == area);
  const RationalPoint c = RationalPoint::barycenter(IndexSet::full(2));
  const PolyForm half = (wedge(lam(2, 1) - constant(2, 1) * q(1, 3), dlam(2, 2)) -
                         wedge(lam(2, 2) - constant(2, 1) * q(1, 3), dlam(2, 1))) *
                        q(1, 2);
  CHECK(poincare(area, c) == half);
  const PolyForm closed = exterior_derivative(wedge(lam(2, 0), lam(2, 2)));
  CHECK(exterior_derivative(poincare(closed, a)) == closed);
}

TEST_CASE("homotopy formula for every base point", "[homotopy][property]") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : testing::sample_points(n, 2, 5 + n))
      for (int k = 0; k <= n; ++k)
        for (const auto& u : basis_full(n, 2, k)) {
          PolyForm rebuilt = k == 0 ? PolyForm::constant(IndexSet::full(n), u.component({}).evaluate(a))
                                    : exterior_derivative(poincare(u, a));
          if (k < n) rebuilt += poincare(exterior_derivative(u), a);
          CHECK(rebuilt == u);
        }
}

TEST_CASE("boundary-respecting Poincare operator", "[homotopy]") {
  const IndexSet tri = IndexSet::full(2);
  const RationalPoint c = RationalPoint::barycenter(tri);
  for (int k = 1; k <= 2; ++k)
    for (const auto& u : basis_full(2, 2, k)) CHECK(boundary_trace(poincare_bc(u, c)).is_zero());

  PolyForm bubble = constant(2, 1);
  for (int i = 0; i <= 2; ++i) bubble = wedge(bubble, lam(2, i));
  const PolyForm g = exterior_derivative(bubble);
  CHECK(boundary_trace(g).is_zero());
  CHECK(exterior_derivative(poincare_bc(g, c)) == g);
}

TEST_CASE("vanishing-trace bases", "[homotopy]") {
  // The only P_3 scalar vanishing on the boundary of a triangle is the bubble.
  CHECK(vanishing_trace_basis(2, 3, 0, Family::full).size() == 1);
  CHECK(vanishing_trace_basis(2, 2, 0, Family::full).empty());
  CHECK(vanishing_trace_basis(2, 1, 2, Family::full).size() == basis_full(2, 1, 2).size());
  for (const auto& u : vanishing_trace_basis(2, 2, 1, Family::full)) CHECK(boundary_trace(u).is_zero());
}

TEST_CASE("complexes", "[homotopy]") {
  CHECK(complex_patterns(3).size() == 4);
  CHECK(complex_patterns(1).size() == 1);
  int admissible = 0;
  for (const auto& p : complex_patterns(3)) {
    try {
      complex_spaces(3, 3, p);
      ++admissible;
    } catch (const InvalidIndexSet&) {
    }
  }
  CHECK(admissible == 4);
  const auto spaces = complex_spaces(3, 2, {Family::trimmed, Family::trimmed});
  REQUIRE(spaces.size() == 4);
  CHECK(spaces[0].index == 2);
  CHECK(spaces[1].family == Family::trimmed);
  CHECK(spaces[1].index == 2);
  CHECK(spaces[3].family == Family::full);
  CHECK(spaces[3].index == 1);
  CHECK_THROWS_AS(complex_spaces(3, 1, {Family::full, Family::full}), InvalidIndexSet);
}

TEST_CASE("all-trimmed complex on the triangle", "[homotopy]") {
  const ComplexReport rep = verify_complex(2, 2, {Family::trimmed}, RationalPoint::barycenter(IndexSet::full(2)));
  CHECK(rep.passed());
  for (const auto& d : rep.homotopy) {
    CHECK(d.failures.empty());
    CHECK(d.passes == d.dim);
  }
}
