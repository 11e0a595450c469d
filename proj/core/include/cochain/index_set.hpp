#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cochain {

/// Largest ambient dimension the combinatorics layer accepts. Forms and
/// polynomials have their own, tighter limits.
inline constexpr int kMaxAmbientDim = 7;

/// An ordered set of distinct vertex labels drawn from {0, ..., n}.
///
/// The order matters: it fixes the orientation of the simplex [x_J] and the
/// sign of every alternating object indexed by J.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int ambient_n, std::vector<int> labels);
  IndexSet(int ambient_n, std::initializer_list<int> labels)
      : IndexSet(ambient_n, std::vector<int>(labels)) {}

  /// All labels {0, ..., n} in increasing order.
  static IndexSet full(int ambient_n);
  /// Builds the increasing set whose members are the set bits of `mask`.
  static IndexSet from_mask(int ambient_n, std::uint32_t mask);

  int ambient_n() const { return ambient_n_; }
  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  /// |J| - 1, the dimension of [x_J].
  int dim() const { return size() - 1; }
  bool increasing() const;
  bool contains(int label) const;
  std::uint32_t mask() const;

  int operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& labels() const { return labels_; }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  bool operator==(const IndexSet&) const = default;
  auto operator<=>(const IndexSet&) const = default;

  std::string to_string() const;

 private:
  int ambient_n_ = 0;
  std::vector<int> labels_;
};

/// Gamma_m: increasing subsets of {0..n} with m+1 elements, lexicographic.
std::vector<IndexSet> enumerate_gamma(int n, int m);

/// Gamma_s(I): increasing subsets of I with s+1 elements, lexicographic.
std::vector<IndexSet> enumerate_gamma_sub(const IndexSet& I, int s);

/// Increasing complement of J relative to {0..n}.
IndexSet complement(const IndexSet& J);

/// Increasing reordering of J together with the parity of the sorting
/// permutation (+1 or -1).
std::pair<IndexSet, int> sort_with_sign(const IndexSet& J);

/// J with the label in position i removed, order otherwise preserved.
IndexSet remove_at(const IndexSet& J, int i);

/// The ordered set {p, J}: p placed in front of the labels of J.
IndexSet prepend(int p, const IndexSet& J);

/// Increasing union of J and {p}.
IndexSet insert_sorted(const IndexSet& J, int p);

/// Sign of the permutation that sorts `labels` (0 if a label repeats).
int permutation_sign(const std::vector<int>& labels);

}  // namespace cochain
