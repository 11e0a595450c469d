#include "cochain/index_set.hpp"

#include "cochain/errors.hpp"

#include <algorithm>
#include <bit>

namespace cochain {

IndexSet::IndexSet(int ambient_n, std::vector<int> labels)
    : ambient_n_(ambient_n), labels_(std::move(labels)) {
  if (ambient_n_ < 0 || ambient_n_ > kMaxAmbientDim)
    throw InvalidIndexSet("ambient dimension " + std::to_string(ambient_n_) + " out of range");
  std::uint32_t seen = 0;
  for (int l : labels_) {
    if (l < 0 || l > ambient_n_)
      throw InvalidIndexSet("label " + std::to_string(l) + " outside [0, " +
                            std::to_string(ambient_n_) + "]");
    if (seen & (1u << l)) throw InvalidIndexSet("repeated label " + std::to_string(l));
    seen |= 1u << l;
  }
}

IndexSet IndexSet::full(int ambient_n) {
  std::vector<int> labels(static_cast<std::size_t>(ambient_n + 1));
  for (int i = 0; i <= ambient_n; ++i) labels[static_cast<std::size_t>(i)] = i;
  return IndexSet(ambient_n, std::move(labels));
}

IndexSet IndexSet::from_mask(int ambient_n, std::uint32_t mask) {
  std::vector<int> labels;
  for (int i = 0; i <= ambient_n; ++i)
    if (mask & (1u << i)) labels.push_back(i);
  if (mask >> (ambient_n + 1)) throw InvalidIndexSet("mask has labels beyond n");
  return IndexSet(ambient_n, std::move(labels));
}

bool IndexSet::increasing() const { return std::is_sorted(labels_.begin(), labels_.end()); }

bool IndexSet::contains(int label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::uint32_t IndexSet::mask() const {
  std::uint32_t m = 0;
  for (int l : labels_) m |= 1u << l;
  return m;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(labels_[i]);
  }
  return s + "}";
}

std::vector<IndexSet> enumerate_gamma(int n, int m) {
  if (m < 0 || m > n) throw InvalidIndexSet("Gamma_m needs 0 <= m <= n");
  return enumerate_gamma_sub(IndexSet::full(n), m);
}

std::vector<IndexSet> enumerate_gamma_sub(const IndexSet& I, int s) {
  if (!I.increasing()) throw InvalidIndexSet("Gamma_s(I) needs an increasing I");
  const int size = I.size();
  if (s < 0 || s > size - 1) throw InvalidIndexSet("Gamma_s(I) needs 0 <= s <= |I|-1");
  // Lexicographic enumeration of (s+1)-combinations of positions.
  std::vector<IndexSet> out;
  std::vector<int> pos(static_cast<std::size_t>(s + 1));
  for (int i = 0; i <= s; ++i) pos[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<int> labels;
    labels.reserve(pos.size());
    for (int p : pos) labels.push_back(I[p]);
    out.emplace_back(I.ambient_n(), std::move(labels));
    int i = s;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == size - (s + 1) + i) --i;
    if (i < 0) break;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= s; ++j)
      pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

IndexSet complement(const IndexSet& J) {
  const std::uint32_t all = (1u << (J.ambient_n() + 1)) - 1;
  return IndexSet::from_mask(J.ambient_n(), all & ~J.mask());
}

int permutation_sign(const std::vector<int>& labels) {
  int inversions = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) return 0;
      if (labels[i] > labels[j]) ++inversions;
    }
  return inversions % 2 ? -1 : 1;
}

std::pair<IndexSet, int> sort_with_sign(const IndexSet& J) {
  std::vector<int> sorted = J.labels();
  const int sign = permutation_sign(sorted);
  if (sign == 0) throw InvalidIndexSet("duplicate labels in " + J.to_string());
  std::sort(sorted.begin(), sorted.end());
  return {IndexSet(J.ambient_n(), std::move(sorted)), sign};
}

IndexSet remove_at(const IndexSet& J, int i) {
  if (i < 0 || i >= J.size())
    throw InvalidIndexSet("position " + std::to_string(i) + " out of range for " + J.to_string());
  std::vector<int> labels = J.labels();
  labels.erase(labels.begin() + i);
  return IndexSet(J.ambient_n(), std::move(labels));
}

IndexSet prepend(int p, const IndexSet& J) {
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(J.size() + 1));
  labels.push_back(p);
  labels.insert(labels.end(), J.begin(), J.end());
  return IndexSet(J.ambient_n(), std::move(labels));
}

IndexSet insert_sorted(const IndexSet& J, int p) {
  return IndexSet::from_mask(J.ambient_n(), J.mask() | (1u << p));
}

}  // namespace cochain
