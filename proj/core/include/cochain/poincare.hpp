#pragma once

#include "cochain/boundary.hpp"
#include "cochain/forms.hpp"
#include "cochain/spaces.hpp"

#include <string>
#include <vector>

namespace cochain {

/// (Q^k u)_x = int_0^1 tau^{k-1} u_{a + tau (x - a)} contracted with (x - a).
/// Throws DegreeMismatch for k = 0.
PolyForm poincare(const PolyForm& u, const RationalPoint& a);

/// (I - E^{k-1} tr) Q^k u; needs 1 <= k <= n.
PolyForm poincare_bc(const PolyForm& u, const RationalPoint& a);

/// Basis of the forms in the given space whose boundary trace vanishes.
std::vector<PolyForm> vanishing_trace_basis(int n, int r, int k, Family family);

/// One polynomial space of a de Rham complex: P_index Lambda^k (full) or
/// P_index^- Lambda^k (trimmed).
struct SpaceChoice {
  Family family;
  int index;
};

/// The spaces of a complex starting at P_r Lambda^0, given the families of
/// degrees 1..n-1. A full space lowers the index by one, a trimmed space
/// keeps it; degree n is always the full space. Throws InvalidIndexSet if
/// an index drops below what the family allows.
std::vector<SpaceChoice> complex_spaces(int n, int r, const std::vector<Family>& middle);

/// All 2^{n-1} family choices for degrees 1..n-1, in binary order with
/// trimmed first.
std::vector<std::vector<Family>> complex_patterns(int n);

struct DegreeReport {
  int k = 0;
  SpaceChoice space{Family::full, 0};
  int dim = 0;
  int passes = 0;
  std::vector<std::string> failures;
};

struct ComplexReport {
  int n = 0;
  int r = 0;
  std::vector<SpaceChoice> spaces;
  std::vector<DegreeReport> homotopy;          // u = dQu + Qdu, mapping degrees
  std::vector<DegreeReport> boundary_homotopy;  // vanishing-trace variant, k <= n-1
  /// u = d Q^n_bc u on the vanishing-trace top-degree basis: recorded only.
  int top_bc_dim = 0;
  int top_bc_holds = 0;

  bool passed() const;
};

ComplexReport verify_complex(int n, int r, const std::vector<Family>& middle, const RationalPoint& a);

}  // namespace cochain
