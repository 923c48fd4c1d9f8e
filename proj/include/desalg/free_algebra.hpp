#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "desalg/group_algebra.hpp"
#include "desalg/permutations.hpp"
#include "desalg/rational.hpp"

namespace desalg {

// Word over the alphabet {1, ..., alphabet}. Letters may repeat. Ordered by
// length, then lexicographically.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }

  auto operator<=>(const Word& o) const {
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    return letters_ <=> o.letters_;
  }
  bool operator==(const Word&) const = default;

 private:
  std::vector<int> letters_;
};

// Element of the free associative algebra on {1, ..., alphabet} over the
// rationals. Sparse map from words, zeros never stored.
class FreeAlgebraElement {
 public:
  explicit FreeAlgebraElement(int alphabet);

  int alphabet() const { return alphabet_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Common length of all words, when the element is homogeneous and nonzero.
  std::optional<int> degree() const;

  Rational coefficient(const Word& w) const;
  void add_term(const Word& w, const Rational& c);

  bool operator==(const FreeAlgebraElement&) const = default;

 private:
  int alphabet_;
  std::map<Word, Rational> terms_;
};

FreeAlgebraElement word_element(int alphabet, const Word& w);

FreeAlgebraElement add(const FreeAlgebraElement& a, const FreeAlgebraElement& b);
FreeAlgebraElement subtract(const FreeAlgebraElement& a, const FreeAlgebraElement& b);
FreeAlgebraElement scale(const Rational& c, const FreeAlgebraElement& a);

// Concatenation product, extended bilinearly.
FreeAlgebraElement concat_product(const FreeAlgebraElement& a, const FreeAlgebraElement& b);

inline FreeAlgebraElement operator+(const FreeAlgebraElement& a, const FreeAlgebraElement& b) { return add(a, b); }
inline FreeAlgebraElement operator-(const FreeAlgebraElement& a, const FreeAlgebraElement& b) { return subtract(a, b); }
inline FreeAlgebraElement operator*(const FreeAlgebraElement& a, const FreeAlgebraElement& b) { return concat_product(a, b); }
inline FreeAlgebraElement operator*(const Rational& c, const FreeAlgebraElement& a) { return scale(c, a); }

// Place action of sigma on a homogeneous element of matching degree: letter i
// of each result word is letter sigma(i) of the source. Zero passes through.
FreeAlgebraElement right_action(const FreeAlgebraElement& e, const Permutation& sigma);

// Linear extension of the place action to a group algebra element; degrees
// must match as above.
FreeAlgebraElement right_action_by_algebra(const FreeAlgebraElement& e,
                                           const GroupAlgebraElement& a);

// Permutations as words: each w becomes its one-line word on the alphabet of
// its own size. Satisfies embed(a) acted on by b == embed(a * b).
FreeAlgebraElement embed(const GroupAlgebraElement& a);

// A word is v-shaped when it strictly decreases to a unique valley and
// strictly increases after it. Returns the 1-based valley position, or
// nothing.
std::optional<int> v_shape_valley(const std::vector<int>& letters);

// The left-nested commutator [[...[s1, s2], s3]...], letters of S increasing,
// as an element on the given alphabet. S must be nonempty, inside the
// alphabet, duplicate-free.
FreeAlgebraElement dynkin(const std::vector<int>& s, int alphabet);

// Same element by its closed form: the signed sum over all v-shaped words on
// the letters of S, sign (-1)^(valley position - 1).
FreeAlgebraElement dynkin_vshape(const std::vector<int>& s, int alphabet);

// Product of the Dynkin elements of the alpha-blocks of [n], n the weight.
FreeAlgebraElement v_alpha(const Composition& alpha);

// Ordered set partitions of the positions {1, ..., length(beta)} into
// length(gamma) blocks whose beta-sums are gamma_1, gamma_2, ...; each block
// an increasing vector. Enumerated in lex order of the block-label
// assignment.
std::vector<std::vector<std::vector<int>>> ordered_set_partitions(
    const Composition& beta, const Composition& gamma);

// Expansion of v_alpha(beta) acted on by b_element(gamma): the sum over
// ordered set partitions T of one Dynkin product per block, where block T_j
// contributes the Dynkin elements of the beta-blocks indexed by T_j, in
// increasing index order, concatenated left to right over j.
FreeAlgebraElement vb_rhs(const Composition& beta, const Composition& gamma);

// The word as a permutation when its letters are exactly 1..n each once.
std::optional<Permutation> as_permutation(const Word& w);

// Words print with letters space-separated ("2 6 7", "()" when empty);
// elements as signed sums like group algebra elements.
std::string to_string(const Word& w);
std::string to_string(const FreeAlgebraElement& a);

}  // namespace desalg
