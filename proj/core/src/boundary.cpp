#include "cochain/boundary.hpp"

#include "cochain/errors.hpp"

namespace cochain {

IndexSet facet_vertices(int n, int omit) {
  std::vector<int> labels;
  for (int v = 0; v <= n; ++v)
    if (v != omit) labels.push_back(v);
  return IndexSet(n, std::move(labels));
}

BoundaryForm::BoundaryForm(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxAmbientDim) throw InvalidIndexSet("boundary dimension out of range");
  if (k < 0 || k > n) throw DegreeMismatch("boundary form degree out of range");
  for (int i = 0; i <= n; ++i) facets_.emplace_back(facet_vertices(n, i), k);
}

BoundaryForm::BoundaryForm(int n, int k, std::vector<PolyForm> facets)
    : n_(n), k_(k), facets_(std::move(facets)) {
  if (n < 1 || n > kMaxAmbientDim) throw InvalidIndexSet("boundary dimension out of range");
  if (k < 0 || k > n) throw DegreeMismatch("boundary form degree out of range");
  if (static_cast<int>(facets_.size()) != n + 1)
    throw DimensionMismatch("boundary data needs one form per facet");
  for (int i = 0; i <= n; ++i) {
    const auto& f = facets_[static_cast<std::size_t>(i)];
    if (f.vertices().labels() != facet_vertices(n, i).labels())
      throw DimensionMismatch("facet form " + std::to_string(i) + " lives on the wrong face");
    if (f.degree() != k) throw DegreeMismatch("facet form has the wrong degree");
  }
}

bool BoundaryForm::is_zero() const {
  for (const auto& f : facets_)
    if (!f.is_zero()) return false;
  return true;
}

BoundaryForm& BoundaryForm::operator+=(const BoundaryForm& o) {
  if (o.n_ != n_ || o.k_ != k_) throw DimensionMismatch("adding unlike boundary forms");
  for (std::size_t i = 0; i < facets_.size(); ++i) facets_[i] += o.facets_[i];
  return *this;
}

BoundaryForm& BoundaryForm::operator-=(const BoundaryForm& o) {
  if (o.n_ != n_ || o.k_ != k_) throw DimensionMismatch("subtracting unlike boundary forms");
  for (std::size_t i = 0; i < facets_.size(); ++i) facets_[i] -= o.facets_[i];
  return *this;
}

BoundaryForm& BoundaryForm::operator*=(const Rational& c) {
  for (auto& f : facets_) f *= c;
  return *this;
}

BoundaryForm boundary_trace(const PolyForm& u) {
  const int n = u.vertices().size() - 1;
  if (u.vertices().labels() != IndexSet::full(n).labels())
    throw DimensionMismatch("boundary traces are taken from the full simplex");
  if (u.degree() > n - 1)
    throw DegreeMismatch("cannot trace a " + std::to_string(u.degree()) + "-form to the boundary of an " +
                         std::to_string(n) + "-simplex");
  std::vector<PolyForm> facets;
  for (int i = 0; i <= n; ++i) facets.push_back(trace(u, facet_vertices(n, i)));
  return BoundaryForm(n, u.degree(), std::move(facets));
}

namespace {

// First pair (i, j), i < j, whose traces disagree; (-1, -1) if none.
std::pair<int, int> first_mismatch(const BoundaryForm& b) {
  const int n = b.n();
  if (n < 2 && b.degree() > 0) return {-1, -1};
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> labels;
      for (int v = 0; v <= n; ++v)
        if (v != i && v != j) labels.push_back(v);
      if (labels.empty()) continue;
      const IndexSet common(n, labels);
      if (b.degree() > common.dim()) continue;
      if (!(trace(b.facet(i), common) == trace(b.facet(j), common))) return {i, j};
    }
  return {-1, -1};
}

}  // namespace

bool check_compatibility(const BoundaryForm& b) { return first_mismatch(b).first < 0; }

void require_compatible(const BoundaryForm& b) {
  const auto [i, j] = first_mismatch(b);
  if (i >= 0)
    throw IncompatibleTraces("facet forms omitting " + std::to_string(i) + " and " + std::to_string(j) +
                             " disagree on their common face");
}

BoundaryForm exterior_derivative(const BoundaryForm& b) {
  if (b.degree() >= b.n()) throw DegreeMismatch("boundary form degree too large for d");
  std::vector<PolyForm> facets;
  for (const auto& f : b.facets()) facets.push_back(exterior_derivative(f));
  return BoundaryForm(b.n(), b.degree() + 1, std::move(facets));
}

std::vector<BoundaryForm> boundary_basis(int n, int r, int k, Family family) {
  if (k > n - 1) throw DegreeMismatch("boundary bases need k <= n-1");
  EchelonBasis echelon;
  std::vector<BoundaryForm> out;
  for (const auto& u : basis(n, r, k, family)) {
    BoundaryForm b = boundary_trace(u);
    if (echelon.insert(to_vector(b))) out.push_back(std::move(b));
  }
  return out;
}

Rational boundary_integral(const BoundaryForm& b) {
  if (b.degree() != b.n() - 1)
    throw DegreeMismatch("the boundary integral needs (n-1)-form data");
  Rational total = 0;
  for (int i = 0; i <= b.n(); ++i) {
    const Rational part = integrate_over(b.facet(i), facet_vertices(b.n(), i));
    total += i % 2 ? -part : part;
  }
  return total;
}

Rational integrate_volume(const PolyForm& u) {
  const int n = u.vertices().size() - 1;
  return integrate_over(u, IndexSet::full(n));
}

SparseVector to_vector(const BoundaryForm& b) {
  SparseVector v;
  for (int i = 0; i <= b.n(); ++i) append_vector(v, b.facet(i), i);
  return v;
}

}  // namespace cochain
