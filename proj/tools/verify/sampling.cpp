#include "sampling.hpp"

#include <algorithm>

namespace cochain::verify {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Uniform draw from [lo, hi] using raw engine output, so results do not
// depend on the standard library's distribution implementation.
int draw(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = splitmix(seed);
  for (auto p : parts) h = splitmix(h ^ p);
  return h;
}

std::vector<RationalPoint> interior_points(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const IndexSet v = IndexSet::full(n);
  std::vector<RationalPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    // A common denominator D in [n+1, 7] split into n+1 positive parts keeps
    // every coordinate at least 1/7.
    const int d = draw(rng, std::min(n + 1, 7), 7);
    std::vector<int> cuts;
    for (int i = 1; i < d; ++i) cuts.push_back(i);
    for (int i = static_cast<int>(cuts.size()) - 1; i > 0; --i) std::swap(cuts[static_cast<std::size_t>(i)], cuts[static_cast<std::size_t>(draw(rng, 0, i))]);
    cuts.resize(static_cast<std::size_t>(n));
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rational> coords;
    int prev = 0;
    for (int cut : cuts) {
      Rational q(cut - prev, d);
      q.canonicalize();
      coords.push_back(q);
      prev = cut;
    }
    Rational last(d - prev, d);
    last.canonicalize();
    coords.push_back(last);
    out.emplace_back(v, std::move(coords));
  }
  return out;
}

std::vector<TangentVector> tangent_vectors(int n, int count, std::mt19937_64& rng) {
  const IndexSet v = IndexSet::full(n);
  std::vector<TangentVector> out;
  for (int c = 0; c < count; ++c) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(n + 1));
    Rational sum = 0;
    for (int i = 1; i <= n; ++i) {
      coeffs[static_cast<std::size_t>(i)] = draw(rng, -3, 3);
      sum += coeffs[static_cast<std::size_t>(i)];
    }
    coeffs[0] = -sum;
    out.emplace_back(v, std::move(coeffs));
  }
  return out;
}

}  // namespace cochain::verify
