#include "cochain/bary_poly.hpp"

#include "cochain/errors.hpp"

#include <algorithm>

namespace cochain {

namespace {

void require_simplex(const IndexSet& v) {
  if (v.empty() || !v.increasing())
    throw InvalidIndexSet("a simplex needs a nonempty increasing vertex set");
  if (v.size() - 1 > Polynomial::kMaxVars)
    throw DimensionMismatch("simplex too large for the polynomial engine");
}

void require_same(const IndexSet& a, const IndexSet& b) {
  if (a.labels() != b.labels())
    throw DimensionMismatch("operands live on different simplices " + a.to_string() + " and " +
                            b.to_string());
}

}  // namespace

int anchor_of(const IndexSet& vertices) {
  require_simplex(vertices);
  return vertices[0];
}

int chart_size(const IndexSet& vertices) { return vertices.size() - 1; }

int chart_index(const IndexSet& vertices, int label) {
  const auto& l = vertices.labels();
  auto it = std::lower_bound(l.begin(), l.end(), label);
  if (it == l.end() || *it != label)
    throw InvalidIndexSet("label " + std::to_string(label) + " is not a vertex of " +
                          vertices.to_string());
  return static_cast<int>(it - l.begin()) - 1;
}

Polynomial chart_coordinate(const IndexSet& vertices, int label) {
  const int idx = chart_index(vertices, label);
  const int nv = chart_size(vertices);
  return idx < 0 ? Polynomial::one_minus_sum(nv) : Polynomial::variable(nv, idx);
}

RationalPoint::RationalPoint(IndexSet vertices, std::vector<Rational> coords)
    : vertices_(std::move(vertices)), coords_(std::move(coords)) {
  require_simplex(vertices_);
  if (static_cast<int>(coords_.size()) != vertices_.size())
    throw DimensionMismatch("point needs one coordinate per vertex");
  Rational sum = 0;
  for (auto& c : coords_) {
    c.canonicalize();
    sum += c;
  }
  if (sum != 1) throw OutOfDomain("barycentric coordinates sum to " + sum.get_str() + ", not 1");
}

RationalPoint RationalPoint::barycenter(const IndexSet& vertices) {
  return RationalPoint(vertices, std::vector<Rational>(static_cast<std::size_t>(vertices.size()),
                                                       Rational(1, vertices.size())));
}

RationalPoint RationalPoint::vertex(const IndexSet& vertices, int label) {
  std::vector<Rational> c(static_cast<std::size_t>(vertices.size()), Rational(0));
  c[static_cast<std::size_t>(chart_index(vertices, label) + 1)] = 1;
  return RationalPoint(vertices, std::move(c));
}

const Rational& RationalPoint::operator[](int label) const {
  return coords_[static_cast<std::size_t>(chart_index(vertices_, label) + 1)];
}

bool RationalPoint::inside() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c >= 0; });
}

bool RationalPoint::strictly_inside() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c > 0; });
}

std::vector<Rational> RationalPoint::chart_values() const {
  return {coords_.begin() + 1, coords_.end()};
}

BaryPoly::BaryPoly(IndexSet vertices) : BaryPoly(vertices, Polynomial(vertices.size() - 1)) {}

BaryPoly::BaryPoly(IndexSet vertices, Polynomial chart_poly)
    : vertices_(std::move(vertices)), poly_(std::move(chart_poly)) {
  require_simplex(vertices_);
  if (poly_.nvars() != chart_size(vertices_))
    throw DimensionMismatch("chart polynomial has the wrong number of variables");
}

BaryPoly BaryPoly::constant(const IndexSet& vertices, const Rational& c) {
  return BaryPoly(vertices, Polynomial::constant(chart_size(vertices), c));
}

BaryPoly BaryPoly::lambda(const IndexSet& vertices, int label) {
  return BaryPoly(vertices, chart_coordinate(vertices, label));
}

BaryPoly BaryPoly::lambda_sum(const IndexSet& vertices, const IndexSet& J) {
  BaryPoly s(vertices);
  for (int j : J) s += lambda(vertices, j);
  return s;
}

std::optional<int> BaryPoly::degree() const {
  if (poly_.is_zero()) return std::nullopt;
  return poly_.degree();
}

BaryPoly& BaryPoly::operator+=(const BaryPoly& o) {
  require_same(vertices_, o.vertices_);
  poly_ += o.poly_;
  return *this;
}

BaryPoly& BaryPoly::operator-=(const BaryPoly& o) {
  require_same(vertices_, o.vertices_);
  poly_ -= o.poly_;
  return *this;
}

BaryPoly& BaryPoly::operator*=(const BaryPoly& o) {
  require_same(vertices_, o.vertices_);
  poly_ = poly_ * o.poly_;
  return *this;
}

BaryPoly& BaryPoly::operator*=(const Rational& c) {
  poly_ *= c;
  return *this;
}

Rational BaryPoly::evaluate(const RationalPoint& x) const {
  require_same(vertices_, x.vertices());
  const auto values = x.chart_values();
  return poly_.evaluate(values);
}

BaryPoly poly_from_symmetric(const IndexSet& vertices, std::span<const SymmetricMonomial> expr) {
  require_simplex(vertices);
  std::vector<Polynomial> coords;
  for (int l : vertices) coords.push_back(chart_coordinate(vertices, l));
  // The symmetric expression is a polynomial in |V| variables; substituting
  // the chart coordinates eliminates the anchor.
  std::vector<Polynomial::Term> terms;
  for (const auto& m : expr) {
    if (static_cast<int>(m.alpha.size()) != vertices.size())
      throw ParseError("monomial exponent vector has " + std::to_string(m.alpha.size()) +
                       " entries, expected " + std::to_string(vertices.size()));
    for (int a : m.alpha)
      if (a < 0) throw ParseError("negative exponent in monomial");
    terms.push_back({Polynomial::pack(m.alpha), m.coeff});
  }
  const Polynomial symmetric = Polynomial::from_terms(vertices.size(), std::move(terms));
  return BaryPoly(vertices, symmetric.substitute(coords));
}

std::vector<SymmetricMonomial> to_symmetric(const BaryPoly& p) {
  std::vector<SymmetricMonomial> out;
  const int nv = chart_size(p.vertices());
  for (const auto& t : p.chart().terms()) {
    std::vector<int> alpha(static_cast<std::size_t>(nv + 1), 0);
    for (int v = 0; v < nv; ++v) alpha[static_cast<std::size_t>(v + 1)] = Polynomial::exponent(t.mono, v);
    out.push_back({std::move(alpha), t.coeff});
  }
  return out;
}

BaryPoly divide_exact(const BaryPoly& p, const BaryPoly& q) {
  require_same(p.vertices(), q.vertices());
  return BaryPoly(p.vertices(), divide_exact(p.chart(), q.chart()));
}

}  // namespace cochain
