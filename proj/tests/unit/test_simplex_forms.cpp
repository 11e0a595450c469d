#include "helpers.hpp"

#include "cochain/errors.hpp"
#include "cochain/forms.hpp"
#include "cochain/spaces.hpp"

#include <functional>

using namespace cochain;
using testing::constant;
using testing::dlam;
using testing::lam;
using testing::q;

namespace {

const IndexSet tri = IndexSet::full(2);

// u(x; v_1..v_k) for u = dlambda_sigma: the k x k determinant of v_j[sigma_i].
Rational dlambda_value(const std::vector<int>& sigma, const std::vector<TangentVector>& vs) {
  const int k = static_cast<int>(sigma.size());
  std::vector<Rational> m;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.push_back(vs[static_cast<std::size_t>(j)][sigma[static_cast<std::size_t>(i)]]);
  // Laplace expansion along the first row, kept separate from determinant().
  std::function<Rational(std::vector<Rational>, int)> det = [&](std::vector<Rational> a, int size) -> Rational {
    if (size == 0) return 1;
    Rational total = 0;
    for (int c = 0; c < size; ++c) {
      std::vector<Rational> minor;
      for (int r = 1; r < size; ++r)
        for (int cc = 0; cc < size; ++cc)
          if (cc != c) minor.push_back(a[static_cast<std::size_t>(r * size + cc)]);
      const Rational term = a[static_cast<std::size_t>(c)] * det(minor, size - 1);
      total += c % 2 ? -term : term;
    }
    return total;
  };
  return det(m, k);
}

std::vector<PolyForm> sample_forms(int n, int k) {
  auto out = basis_full(n, 2, k);
  if (out.size() > 12) out.erase(out.begin() + 12, out.end());
  return out;
}

}  // namespace

TEST_CASE("wedge product", "[forms]") {
  CHECK(wedge(dlam(2, 1), dlam(2, 1)).is_zero());
  CHECK(wedge(lam(2, 0), dlam(2, 1)) == multiply(BaryPoly::lambda(tri, 0), dlam(2, 1)));
  CHECK(wedge(dlam(2, 1), dlam(2, 2)) == -wedge(dlam(2, 2), dlam(2, 1)));
}

TEST_CASE("wedge is graded commutative and associative", "[forms][property]") {
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l + k <= 3; ++l)
      for (const auto& u : sample_forms(3, k))
        for (const auto& v : sample_forms(3, l)) {
          const PolyForm uv = wedge(u, v), vu = wedge(v, u);
          CHECK(uv == ((k * l) % 2 ? -vu : vu));
        }
  const PolyForm a = lam(3, 1) * q(2) + constant(3, 1);
  const PolyForm b = dlam(3, 2), c = wedge(lam(3, 3), dlam(3, 0));
  CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
}

TEST_CASE("exterior derivative", "[forms]") {
  CHECK(exterior_derivative(lam(2, 1)) == dlam(2, 1));
  CHECK(exterior_derivative(wedge(lam(2, 0), dlam(2, 1))) == wedge(dlam(2, 1), dlam(2, 2)));
  CHECK(exterior_derivative(constant(2, 5)).is_zero());
  CHECK(exterior_derivative(constant(2, 5)).degree() == 1);
}

TEST_CASE("d squares to zero and obeys the Leibniz rule", "[forms][property]") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& u : sample_forms(n, k)) {
        if (k + 2 <= n) CHECK(exterior_derivative(exterior_derivative(u)).is_zero());
        for (int l = 0; k + l + 1 <= n; ++l)
          for (const auto& v : sample_forms(n, l)) {
            const PolyForm lhs = exterior_derivative(wedge(u, v));
            const PolyForm second = wedge(u, exterior_derivative(v));
            CHECK(lhs == wedge(exterior_derivative(u), v) + (k % 2 ? -second : second));
          }
      }
}

TEST_CASE("contraction", "[forms]") {
  const PolyForm c = contract(dlam(2, 1), TangentVector::edge(tri, 0, 1));
  CHECK(c == constant(2, 1));
  CHECK(contract(wedge(dlam(2, 1), dlam(2, 2)), TangentVector::edge(tri, 0, 2)) == -dlam(2, 1));
  CHECK(contract_koszul_anchor(dlam(2, 1)) == lam(2, 1));
  CHECK_THROWS_AS(contract(constant(2, 1), TangentVector::edge(tri, 0, 1)), DegreeMismatch);
  CHECK_THROWS(TangentVector(tri, {q(1), q(1), q(0)}));
}

TEST_CASE("evaluation against determinants", "[forms][property]") {
  const IndexSet tet = IndexSet::full(3);
  const std::vector<TangentVector> vs{TangentVector(tet, {q(-1), q(2), q(0), q(-1)}),
                                      TangentVector(tet, {q(1, 2), q(0), q(-3, 2), q(1)}),
                                      TangentVector::edge(tet, 3, 1)};
  const RationalPoint x = RationalPoint::barycenter(tet);
  for (int k = 1; k <= 3; ++k)
    for (const auto& J : enumerate_gamma(3, k - 1)) {
      PolyForm u = PolyForm::constant(tet, 1);
      for (int label : J) u = wedge(u, dlam(3, label));
      const std::span<const TangentVector> first(vs.data(), static_cast<std::size_t>(k));
      CHECK(form_eval(u, x, first) == dlambda_value(J.labels(), {vs.begin(), vs.begin() + k}));
    }
  const std::vector<TangentVector> e10{TangentVector::edge(tri, 0, 1)};
  CHECK(form_eval(dlam(2, 1), RationalPoint::barycenter(tri), e10) == 1);
  const std::vector<TangentVector> e{TangentVector::edge(tri, 0, 1), TangentVector::edge(tri, 0, 2)};
  CHECK(form_eval(wedge(dlam(2, 1), dlam(2, 2)), RationalPoint::barycenter(tri), e) == 1);
  const IndexSet edge(1, {0, 1});
  const std::vector<TangentVector> ev{TangentVector::edge(edge, 0, 1)};
  CHECK(form_eval(whitney(edge, edge), RationalPoint::barycenter(edge), ev) == 1);
}

TEST_CASE("contraction matches evaluation", "[forms][property]") {
  const IndexSet tet = IndexSet::full(3);
  const TangentVector w(tet, {q(1), q(-2), q(3), q(-2)});
  const TangentVector v = TangentVector::edge(tet, 2, 0);
  const RationalPoint x(tet, {q(1, 7), q(2, 7), q(3, 7), q(1, 7)});
  for (const auto& u : sample_forms(3, 2)) {
    const std::vector<TangentVector> wv{w, v}, only{v};
    CHECK(form_eval(u, x, wv) == form_eval(contract(u, w), x, only));
  }
}

TEST_CASE("traces", "[forms]") {
  const IndexSet e12(2, {1, 2}), e01(2, {0, 1});
  CHECK(trace(wedge(lam(2, 0), dlam(2, 1)), e12).is_zero());
  CHECK(trace(wedge(lam(2, 1), dlam(2, 2)), e12) ==
        wedge(PolyForm::lambda(e12, 1), PolyForm::dlambda(e12, 2)));
  const PolyForm t = trace(whitney(tri, e01), e01);
  CHECK(integrate_over(t, e01) == 1);
  CHECK(t == whitney(e01, e01));
}

TEST_CASE("trace commutes with d and composes", "[forms][property]") {
  const IndexSet tet = IndexSet::full(3);
  for (int k = 0; k <= 1; ++k)
    for (const auto& u : sample_forms(3, k))
      for (int m = 1; m <= 2; ++m)
        for (const auto& W : enumerate_gamma(3, m)) {
          CHECK(trace(exterior_derivative(u), W) == exterior_derivative(trace(u, W)));
          if (m == 2)
            for (const auto& E : enumerate_gamma_sub(W, 1)) CHECK(trace(trace(u, W), E) == trace(u, E));
        }
}

TEST_CASE("affine pullback", "[forms]") {
  const AffineMap id{tri, tri, {BaryPoly::lambda(tri, 0), BaryPoly::lambda(tri, 1), BaryPoly::lambda(tri, 2)}};
  const PolyForm u = wedge(lam(2, 1), dlam(2, 2)) + dlam(2, 1) * q(3);
  CHECK(pullback_affine(id, u) == u);
  const AffineMap to_vertex{tri, tri, {BaryPoly(tri), BaryPoly::constant(tri, 1), BaryPoly(tri)}};
  CHECK(pullback_affine(to_vertex, u).is_zero());
  const AffineMap squash{tri, tri,
                         {BaryPoly::lambda(tri, 0) + BaryPoly::lambda(tri, 1), BaryPoly(tri), BaryPoly::lambda(tri, 2)}};
  CHECK(pullback_affine(squash, dlam(2, 2)) == dlam(2, 2));
  const AffineMap bad{tri, tri, {BaryPoly::lambda(tri, 0), BaryPoly::lambda(tri, 0), BaryPoly::lambda(tri, 2)}};
  CHECK_THROWS_AS(validate(bad), ParseError);
}

TEST_CASE("pullback commutes with d", "[forms][property]") {
  const IndexSet tet = IndexSet::full(3);
  const AffineMap g{tet, tet,
                    {BaryPoly::lambda(tet, 0) * q(1, 2), BaryPoly::lambda(tet, 1) + BaryPoly::lambda(tet, 0) * q(1, 2),
                     BaryPoly::lambda(tet, 3), BaryPoly::lambda(tet, 2)}};
  for (int k = 0; k <= 2; ++k)
    for (const auto& u : sample_forms(3, k))
      CHECK(pullback_affine(g, exterior_derivative(u)) == exterior_derivative(pullback_affine(g, u)));
}

TEST_CASE("Whitney forms", "[forms]") {
  CHECK(whitney(tri, IndexSet(2, {1})) == lam(2, 1));
  CHECK(whitney(tri, IndexSet(2, {0, 2})) == wedge(lam(2, 0), dlam(2, 2)) - wedge(lam(2, 2), dlam(2, 0)));
  CHECK(whitney(tri, tri) == wedge(dlam(2, 1), dlam(2, 2)));
  CHECK(whitney(tri, IndexSet(2, {2, 0})) == -whitney(tri, IndexSet(2, {0, 2})));
}

TEST_CASE("Whitney forms are dual to faces", "[forms][property]") {
  for (int n = 1; n <= 3; ++n)
    for (int s = 0; s <= n; ++s)
      for (const auto& J : enumerate_gamma(n, s))
        for (const auto& K : enumerate_gamma(n, s)) {
          const Rational expected = J == K ? Rational(1) / factorial(static_cast<unsigned>(s)) : Rational(0);
          CHECK(integrate_over(whitney(IndexSet::full(n), J), K) == expected);
        }
}

TEST_CASE("integrals", "[forms]") {
  const IndexSet e01(2, {0, 1});
  CHECK(integrate_over(dlam(2, 1), e01) == 1);
  CHECK(integrate_over(wedge(lam(2, 1), dlam(2, 1)), e01) == q(1, 2));
  CHECK(integrate_over(whitney(tri, tri), tri) == q(1, 2));
  CHECK(integrate_over(dlam(2, 1), IndexSet(2, {1, 0})) == -1);
}

TEST_CASE("Stokes on every face", "[forms][property]") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k < n; ++k)
      for (const auto& u : sample_forms(n, k))
        for (const auto& J : enumerate_gamma(n, k + 1)) {
          Rational boundary = 0;
          for (int i = 0; i < J.size(); ++i) {
            const Rational part = integrate_over(u, remove_at(J, i));
            boundary += i % 2 ? -part : part;
          }
          CHECK(integrate_over(exterior_derivative(u), J) == boundary);
        }
}

TEST_CASE("space dimensions", "[spaces]") {
  CHECK(basis_full(2, 1, 1).size() == 6);
  CHECK(basis_trimmed(2, 2, 1).size() == 8);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(Integer(static_cast<unsigned long>(basis_trimmed(n, 1, k).size())) == binomial(n + 1, k + 1));
      for (int r = 1; r <= (n <= 2 ? 3 : 2); ++r) {
        CHECK(Integer(static_cast<unsigned long>(basis_full(n, r, k).size())) == dim_full(n, r, k));
        CHECK(Integer(static_cast<unsigned long>(basis_trimmed(n, r, k).size())) == dim_trimmed(n, r, k));
      }
    }
}

TEST_CASE("trimmed spaces match the Koszul decomposition", "[spaces][property]") {
  // P_r^- Lambda^k = P_{r-1} Lambda^k + kappa P_{r-1} Lambda^{k+1}.
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 2; ++r)
      for (int k = 0; k <= n; ++k) {
        EchelonBasis span;
        for (const auto& u : basis_full(n, r - 1, k)) span.insert(to_vector(u));
        if (k < n)
          for (const auto& u : basis_full(n, r - 1, k + 1)) span.insert(to_vector(contract_koszul_anchor(u)));
        const auto trimmed = basis_trimmed(n, r, k);
        CHECK(span.rank() == static_cast<int>(trimmed.size()));
        for (const auto& u : trimmed) CHECK(span.in_span(to_vector(u)));
      }
}

TEST_CASE("membership", "[spaces]") {
  for (const auto& J : enumerate_gamma(2, 1)) CHECK(in_trimmed(whitney(tri, J), 1));
  const PolyForm u = wedge(lam(2, 1), dlam(2, 2));
  CHECK_FALSE(in_trimmed(u, 1));
  CHECK(in_full(u, 1));
  CHECK(in_trimmed(PolyForm(tri, 1), 1));
  CHECK(in_full(PolyForm(tri, 2), 0));
  CHECK_FALSE(in_full(wedge(lam(2, 1), lam(2, 1)), 1));
}

TEST_CASE("family names", "[spaces]") {
  CHECK(parse_family("full") == Family::full);
  CHECK(parse_family("trimmed") == Family::trimmed);
  CHECK(to_string(Family::trimmed) == "trimmed");
  CHECK_THROWS_AS(parse_family("P-"), ParseError);
}
