#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace desalg {

// Composition of n: finite sequence of positive parts. The empty composition
// is the unique composition of 0. Ordered lexicographically by parts, which
// is the enumeration order of compositions_of.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Partition: composition with weakly decreasing parts. Only obtainable by
// sorting a composition, so the invariant holds by construction.
class Partition {
 public:
  Partition() = default;

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }

  auto operator<=>(const Partition&) const = default;

 private:
  friend Partition underlying_partition(const Composition& alpha);
  std::vector<int> parts_;
  int weight_ = 0;
};

// Nonnegative integer matrix remembered together with its margins.
// matrices_with_margins produces these with column sums alpha and row sums
// beta; rows and columns are never zero-sum there since parts are positive.
class MarginMatrix {
 public:
  MarginMatrix(std::vector<std::vector<int>> entries);

  const std::vector<std::vector<int>>& entries() const { return entries_; }
  int rows() const { return static_cast<int>(entries_.size()); }
  int cols() const { return entries_.empty() ? 0 : static_cast<int>(entries_[0].size()); }
  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;

  auto operator<=>(const MarginMatrix&) const = default;

 private:
  std::vector<std::vector<int>> entries_;
};

// All 2^(n-1) compositions of n in lexicographic order.
std::vector<Composition> compositions_of(int n);

// Partial sums of alpha except the last: the subset of [n-1] whose gaps cut
// [n] into the alpha-blocks.
std::vector<int> set_of(const Composition& alpha);

// Inverse of set_of: the composition of n whose partial sums are exactly the
// given subset of [n-1]. The subset may arrive unsorted but not with
// duplicates or entries outside [n-1].
Composition comp_of(const std::vector<int>& subset, int n);

// Consecutive intervals of [n] with lengths alpha_1, alpha_2, ...; 1-based
// inclusive endpoints.
std::vector<std::pair<int, int>> blocks(const Composition& alpha);

Partition underlying_partition(const Composition& alpha);

// True iff beta is a refinement of alpha, i.e. alpha is obtained from beta by
// summing consecutive runs; equivalently set_of(alpha) is a subset of
// set_of(beta). Weights must agree.
bool refines(const Composition& beta, const Composition& alpha);

// True iff some rearrangement of lambda's parts refines mu written as a
// composition; equivalently lambda's parts can be grouped so that the group
// sums are exactly mu's parts, every part used once. Weights must agree.
bool partition_refines(const Partition& lambda, const Partition& mu);

// Number of maps f from the positions of beta onto positions of alpha with
// alpha_j equal to the sum of beta over the preimage of j. Zero when the
// weights differ. Exhaustive enumeration; rejects length(beta) > 12.
long long eta(const Composition& beta, const Composition& alpha);

// All nonnegative integer matrices with column sums alpha and row sums beta,
// in lexicographic order of the row-major entry sequence.
std::vector<MarginMatrix> matrices_with_margins(const Composition& alpha,
                                                const Composition& beta);

// Row-major concatenation of the entries with zeros dropped, as a
// composition. For a margin matrix this is a composition of the common
// weight of its margins.
Composition read(const MarginMatrix& m);

// Text forms. Compositions print as "(2,1,1)" and parse from "2,1,1" with or
// without the parentheses; subsets print as "{1,3}" in increasing order.
std::string to_string(const Composition& alpha);
std::string to_string(const Partition& lambda);
Composition parse_composition(const std::string& text);
std::string to_string_subset(const std::vector<int>& subset);

}  // namespace desalg
