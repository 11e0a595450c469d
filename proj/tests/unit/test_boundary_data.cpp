#include "helpers.hpp"

#include "cochain/boundary.hpp"
#include "cochain/errors.hpp"

using namespace cochain;
using testing::constant;
using testing::dlam;
using testing::lam;
using testing::q;

namespace {

const IndexSet tri = IndexSet::full(2);

}  // namespace

TEST_CASE("boundary trace of scalars", "[boundary]") {
  const BoundaryForm b = boundary_trace(lam(2, 0));
  CHECK(b.facet(0).is_zero());
  const IndexSet f1 = facet_vertices(2, 1), f2 = facet_vertices(2, 2);
  CHECK(f1.labels() == std::vector<int>{0, 2});
  CHECK(b.facet(1) == PolyForm::constant(f1, 1) - PolyForm::lambda(f1, 2));
  CHECK(b.facet(2) == PolyForm::constant(f2, 1) - PolyForm::lambda(f2, 1));
  const BoundaryForm c = boundary_trace(constant(2, 7));
  for (int i = 0; i <= 2; ++i) CHECK(c.facet(i) == PolyForm::constant(facet_vertices(2, i), 7));
}

TEST_CASE("boundary trace of a Whitney form", "[boundary]") {
  const BoundaryForm b = boundary_trace(whitney(tri, IndexSet(2, {0, 1})));
  CHECK(b.facet(0).is_zero());
  CHECK(b.facet(1).is_zero());
  CHECK(integrate_over(b.facet(2), IndexSet(2, {0, 1})) == 1);
  CHECK_THROWS_AS(boundary_trace(whitney(tri, tri)), DegreeMismatch);
}

TEST_CASE("compatibility", "[boundary]") {
  for (int k = 0; k <= 1; ++k)
    for (const auto& u : basis_full(2, 2, k)) CHECK(check_compatibility(boundary_trace(u)));

  std::vector<PolyForm> facets;
  for (int i = 0; i <= 2; ++i) facets.push_back(PolyForm::constant(facet_vertices(2, i), i == 0 ? 2 : 1));
  const BoundaryForm mismatch(2, 0, facets);
  CHECK_FALSE(check_compatibility(mismatch));
  CHECK_THROWS_AS(require_compatible(mismatch), IncompatibleTraces);

  std::vector<PolyForm> edges;
  for (int i = 0; i <= 2; ++i) {
    const IndexSet f = facet_vertices(2, i);
    edges.push_back(PolyForm::dlambda(f, f[1]) * q(i + 1));
  }
  CHECK(check_compatibility(BoundaryForm(2, 1, edges)));
}

TEST_CASE("malformed boundary data", "[boundary][errors]") {
  std::vector<PolyForm> two{PolyForm::constant(facet_vertices(2, 0), 1), PolyForm::constant(facet_vertices(2, 1), 1)};
  CHECK_THROWS_AS(BoundaryForm(2, 0, two), DimensionMismatch);
  std::vector<PolyForm> wrong_place{PolyForm::constant(facet_vertices(2, 1), 1),
                                    PolyForm::constant(facet_vertices(2, 1), 1),
                                    PolyForm::constant(facet_vertices(2, 2), 1)};
  CHECK_THROWS_AS(BoundaryForm(2, 0, wrong_place), DimensionMismatch);
}

TEST_CASE("boundary bases", "[boundary]") {
  CHECK(boundary_basis(2, 1, 0, Family::full).size() == 3);
  CHECK(boundary_basis(2, 1, 1, Family::trimmed).size() == 3);
  for (int r = 1; r <= 3; ++r) CHECK(boundary_basis(1, r, 0, Family::full).size() == 2);
  // Traces of P_r Lambda^0 on the triangle: vertices, r-1 per edge.
  for (int r = 1; r <= 3; ++r) CHECK(boundary_basis(2, r, 0, Family::full).size() == static_cast<std::size_t>(3 * r));
}

TEST_CASE("boundary integral", "[boundary]") {
  std::vector<PolyForm> ends{PolyForm::constant(facet_vertices(1, 0), 5), PolyForm::constant(facet_vertices(1, 1), 2)};
  CHECK(boundary_integral(BoundaryForm(1, 0, ends)) == 5 - 2);
  CHECK(boundary_integral(boundary_trace(wedge(lam(2, 0), dlam(2, 1)))) == q(1, 2));
}

TEST_CASE("Stokes for traces", "[boundary][property]") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& u : basis_full(n, 2, n - 1))
      CHECK(integrate_volume(exterior_derivative(u)) == boundary_integral(boundary_trace(u)));
}

TEST_CASE("facet-wise d commutes with the trace", "[boundary][property]") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n - 2; ++k)
      for (const auto& u : basis_full(n, 2, k))
        CHECK(exterior_derivative(boundary_trace(u)) == boundary_trace(exterior_derivative(u)));
  CHECK(exterior_derivative(boundary_trace(dlam(2, 1))).is_zero());
}
