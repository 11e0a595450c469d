#pragma once

#include "cochain/forms.hpp"
#include "cochain/linalg.hpp"
#include "cochain/spaces.hpp"

#include <string>
#include <vector>

namespace cochain {

/// Vertex set {0..n} without label i: the facet opposite x_i.
IndexSet facet_vertices(int n, int omit);

/// Piecewise polynomial k-form on the boundary of the n-simplex: one form per
/// facet, indexed by the omitted vertex. Interface agreement is not enforced
/// by construction; see check_compatibility.
class BoundaryForm {
 public:
  /// Zero data of degree k.
  BoundaryForm(int n, int k);
  /// facets[i] must live on facet_vertices(n, i) and have degree k.
  BoundaryForm(int n, int k, std::vector<PolyForm> facets);

  int n() const { return n_; }
  int degree() const { return k_; }
  const std::vector<PolyForm>& facets() const { return facets_; }
  const PolyForm& facet(int omit) const { return facets_[static_cast<std::size_t>(omit)]; }
  bool is_zero() const;

  BoundaryForm& operator+=(const BoundaryForm& o);
  BoundaryForm& operator-=(const BoundaryForm& o);
  BoundaryForm& operator*=(const Rational& c);
  friend BoundaryForm operator+(BoundaryForm a, const BoundaryForm& b) { return a += b; }
  friend BoundaryForm operator-(BoundaryForm a, const BoundaryForm& b) { return a -= b; }
  friend BoundaryForm operator*(BoundaryForm a, const Rational& c) { return a *= c; }
  bool operator==(const BoundaryForm& o) const = default;

 private:
  int n_;
  int k_;
  std::vector<PolyForm> facets_;
};

/// Per-facet traces of an interior form. Throws DegreeMismatch if k > n-1.
BoundaryForm boundary_trace(const PolyForm& u);

/// True iff the traces of every pair of facet forms onto their common face
/// agree.
bool check_compatibility(const BoundaryForm& b);

/// Throws IncompatibleTraces naming the first disagreeing pair.
void require_compatible(const BoundaryForm& b);

/// Facet-wise exterior derivative. At k = n-1 the result is the zero n-form
/// data.
BoundaryForm exterior_derivative(const BoundaryForm& b);

/// Basis of tr P_r Lambda^k or tr P_r^- Lambda^k, selected from the traces of
/// the interior basis in basis order.
std::vector<BoundaryForm> boundary_basis(int n, int r, int k, Family family);

/// sum_i (-1)^i times the integral of facet form i over [x_(i^)].
Rational boundary_integral(const BoundaryForm& b);

/// Integral of an n-form over the reference simplex [x_0, ..., x_n].
Rational integrate_volume(const PolyForm& u);

SparseVector to_vector(const BoundaryForm& b);

}  // namespace cochain
