#include "helpers.hpp"

#include "cochain/errors.hpp"
#include "cochain/index_set.hpp"

using namespace cochain;

namespace {

std::vector<std::vector<int>> labels(const std::vector<IndexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) out.push_back(s.labels());
  return out;
}

}  // namespace

TEST_CASE("enumerate_gamma lists increasing subsets", "[index]") {
  CHECK(labels(enumerate_gamma(2, 1)) == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(enumerate_gamma(3, 1).size() == 6);
  CHECK(labels(enumerate_gamma(2, 2)) == std::vector<std::vector<int>>{{0, 1, 2}});
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= n; ++m) {
      const auto sets = enumerate_gamma(n, m);
      CHECK(Integer(static_cast<unsigned long>(sets.size())) == binomial(n + 1, m + 1));
      for (std::size_t i = 0; i + 1 < sets.size(); ++i) CHECK(sets[i] < sets[i + 1]);
      for (const auto& s : sets) CHECK(s.increasing());
    }
}

TEST_CASE("enumerate_gamma_sub lists subsets of I", "[index]") {
  CHECK(labels(enumerate_gamma_sub(IndexSet(2, {0, 1, 2}), 1)) == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(labels(enumerate_gamma_sub(IndexSet(2, {0, 2}), 0)) == std::vector<std::vector<int>>{{0}, {2}});
  CHECK(enumerate_gamma_sub(IndexSet(3, {0, 1, 2, 3}), 2).size() == 4);
  CHECK_THROWS_AS(enumerate_gamma_sub(IndexSet(3, {0, 1}), 2), InvalidIndexSet);
}

TEST_CASE("complement", "[index]") {
  CHECK(complement(IndexSet(3, {0, 2})).labels() == std::vector<int>{1, 3});
  CHECK(complement(IndexSet::full(4)).empty());
  CHECK(complement(IndexSet(2, {1})).labels() == std::vector<int>{0, 2});
}

TEST_CASE("sort_with_sign", "[index]") {
  auto [a, sa] = sort_with_sign(IndexSet(2, {2, 0}));
  CHECK(a.labels() == std::vector<int>{0, 2});
  CHECK(sa == -1);
  auto [b, sb] = sort_with_sign(IndexSet(2, {0, 1, 2}));
  CHECK(b.labels() == std::vector<int>{0, 1, 2});
  CHECK(sb == 1);
  auto [c, sc] = sort_with_sign(IndexSet(2, {1, 2, 0}));
  CHECK(c.labels() == std::vector<int>{0, 1, 2});
  CHECK(sc == 1);
}

TEST_CASE("permutation sign agrees with inversion count", "[index][property]") {
  std::vector<int> p{0, 1, 2, 3, 4};
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    CHECK(permutation_sign(p) == (inversions % 2 ? -1 : 1));
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(permutation_sign({1, 1}) == 0);
}

TEST_CASE("remove_at, prepend and insert_sorted", "[index]") {
  CHECK(remove_at(IndexSet(2, {0, 1, 2}), 1).labels() == std::vector<int>{0, 2});
  CHECK(remove_at(IndexSet(2, {0, 1}), 0).labels() == std::vector<int>{1});
  CHECK(remove_at(IndexSet(3, {0, 1, 2, 3}), 3).labels() == std::vector<int>{0, 1, 2});
  CHECK(prepend(2, IndexSet(3, {0, 3})).labels() == std::vector<int>{2, 0, 3});
  CHECK(insert_sorted(IndexSet(3, {0, 3}), 2).labels() == std::vector<int>{0, 2, 3});
}

TEST_CASE("invalid index sets are rejected", "[index][errors]") {
  CHECK_THROWS_AS(IndexSet(2, {0, 3}), InvalidIndexSet);
  CHECK_THROWS_AS(IndexSet(2, {1, 1}), InvalidIndexSet);
  CHECK_THROWS_AS(IndexSet(2, {-1}), InvalidIndexSet);
  CHECK_THROWS_AS(enumerate_gamma(2, 3), InvalidIndexSet);
  CHECK_THROWS_AS(remove_at(IndexSet(2, {0, 1}), 2), InvalidIndexSet);
  CHECK_THROWS_AS(prepend(1, IndexSet(2, {0, 1})), InvalidIndexSet);
}

TEST_CASE("mask round trip", "[index]") {
  for (int m = 0; m <= 3; ++m)
    for (const auto& s : enumerate_gamma(3, m)) CHECK(IndexSet::from_mask(3, s.mask()) == s);
}
