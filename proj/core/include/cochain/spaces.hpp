#pragma once

#include "cochain/forms.hpp"
#include "cochain/linalg.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cochain {

enum class Family { full, trimmed };

std::string_view to_string(Family f);
/// Accepts "full" and "trimmed"; throws ParseError otherwise.
Family parse_family(std::string_view s);

/// Exponent vectors (packed) of all monomials in nvars variables with total
/// degree exactly d, in increasing packed order.
std::vector<Polynomial::Monomial> monomials_of_degree(int nvars, int d);

/// All k-element subsets of {0..nvars-1} as bit masks, lexicographic.
std::vector<std::uint32_t> masks_of_size(int nvars, int k);

/// Basis of P_r Lambda^k on the reference n-simplex {0..n}; r >= 0.
std::vector<PolyForm> basis_full(int n, int r, int k);
/// Basis of the trimmed space P_r^- Lambda^k; r >= 1.
std::vector<PolyForm> basis_trimmed(int n, int r, int k);
std::vector<PolyForm> basis(int n, int r, int k, Family family);

Integer dim_full(int n, int r, int k);
Integer dim_trimmed(int n, int r, int k);

bool in_full(const PolyForm& u, int r);
/// u in P_r Lambda^k and u contracted with x - x_anchor in P_r Lambda^{k-1}.
bool in_trimmed(const PolyForm& u, int r);
bool membership(const PolyForm& u, Family family, int r);

/// Coordinates of u in the monomial-times-dz basis, tagged with `piece`.
SparseVector to_vector(const PolyForm& u, int piece = 0);
void append_vector(SparseVector& out, const PolyForm& u, int piece);

}  // namespace cochain
