#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "desalg/compositions.hpp"

namespace desalg {

// Permutation of [n] in one-line notation. w(i) is 1-based; the default
// object is the unique permutation of the empty set. Ordered lexicographically
// by one-line word, consistent with lex_rank.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  int size() const { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const;
  const std::vector<int>& one_line() const { return one_line_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> one_line_;
};

Permutation identity_permutation(int n);

// (compose(u, w))(i) = u(w(i)). Sizes must agree.
Permutation compose(const Permutation& u, const Permutation& w);
Permutation inverse(const Permutation& w);

std::uint64_t factorial(int n);

// Position of w among the n! permutations of [n] in lex order, 0-based.
std::uint64_t lex_rank(const Permutation& w);
Permutation from_lex_rank(int n, std::uint64_t rank);

// All n! permutations in lex order. Refuses n > 8 unless unguarded, and
// n > 10 always: the vector alone would not fit in memory.
std::vector<Permutation> all_permutations(int n, bool unguarded = false);

// Strict lexicographic comparison of one-line notations; sizes must agree.
bool lex_less(const Permutation& u, const Permutation& w);

// If w(i), ..., w(j) strictly decreases and then strictly increases, the
// position in w of the unique valley; otherwise nothing. 1 <= i <= j <= n.
std::optional<int> has_v_shape_on(const Permutation& w, int i, int j);

// {i in [n-1] : w(i) > w(i+1)}, increasing.
std::vector<int> descent_set(const Permutation& w);

// Left-to-right minima values: entries smaller than everything before them.
// Returned increasing; they are met in decreasing order when reading w.
std::vector<int> lrm(const Permutation& w);

// {l - 1 : l in lrm(w), l > 1}, increasing. A subset of [n-1].
std::vector<int> lrm_prime(const Permutation& w);

// comp_of(lrm_prime(w), n).
Composition clrm_prime(const Permutation& w);

// The minima in reading order, computed by the inverse-image recursion:
// start from the sentinel n+1 and repeatedly take w at the leftmost position
// carrying a value below the previous minimum. Equals lrm(w) reversed.
std::vector<int> lrm_sequence(const Permutation& w);

// Compact digit string for n <= 9 ("672491853"), comma-separated one-line
// notation otherwise, "()" for n = 0. parse_permutation accepts all three.
std::string to_string(const Permutation& w);
Permutation parse_permutation(const std::string& text);

}  // namespace desalg
