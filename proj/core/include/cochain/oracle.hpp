#pragma once

#include "cochain/boundary.hpp"
#include "cochain/forms.hpp"

#include <span>

namespace cochain {

/// Evaluates the rational blending formula
///   E_n^k u = (1/n) sum_I (-1)^{m+1} sum_{J in Gamma_s(I), s <= k} phi_J / lambda_I^{s+1} ^ A_{I,J}^k u
/// directly at one strictly interior point. Every operator value is computed
/// pointwise from its integral definition: no symbolic pullback, wedge or
/// division is involved. Throws OutOfDomain if x touches the boundary.
Rational extend_eval_oracle(const BoundaryForm& u, const RationalPoint& x, std::span<const TangentVector> vs);

/// Pointwise R_{I,K}^k u (x)(ws) from the fiber integral, K ordered.
Rational r_eval_oracle(const BoundaryForm& u, const IndexSet& I, const IndexSet& K, const RationalPoint& x,
                       std::span<const TangentVector> ws);

}  // namespace cochain
