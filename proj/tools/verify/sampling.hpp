#pragma once

#include "cochain/forms.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace cochain::verify {

/// Mixes a base seed with case coordinates so every case draws its own
/// reproducible stream regardless of which suites run before it.
std::uint64_t case_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> parts);

/// Strictly interior points of the n-simplex whose coordinates have
/// denominators at most 7 and are all at least 1/16.
std::vector<RationalPoint> interior_points(int n, int count, std::uint64_t seed);

/// Tangent vectors with small integer coefficients.
std::vector<TangentVector> tangent_vectors(int n, int count, std::mt19937_64& rng);

}  // namespace cochain::verify
