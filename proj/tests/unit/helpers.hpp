#pragma once

#include "cochain/bary_poly.hpp"
#include "cochain/forms.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

namespace testing {

using namespace cochain;

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline IndexSet full(int n) { return IndexSet::full(n); }

inline PolyForm lam(int n, int label) { return PolyForm::lambda(full(n), label); }
inline PolyForm dlam(int n, int label) { return PolyForm::dlambda(full(n), label); }
inline PolyForm constant(int n, long c) { return PolyForm::constant(full(n), q(c)); }

inline RationalPoint point(const IndexSet& v, std::vector<Rational> c) { return RationalPoint(v, std::move(c)); }

// Strictly interior points with small denominators, reproducible from seed.
inline std::vector<RationalPoint> sample_points(int n, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<RationalPoint> out;
  for (int i = 0; i < count; ++i) {
    std::vector<long> w(static_cast<std::size_t>(n + 1));
    long total = 0;
    for (auto& x : w) total += x = 1 + static_cast<long>(rng() % 5);
    std::vector<Rational> c;
    for (long x : w) c.push_back(q(x, total));
    out.emplace_back(full(n), std::move(c));
  }
  return out;
}

}  // namespace testing
