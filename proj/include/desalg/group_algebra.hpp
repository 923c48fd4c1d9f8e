#pragma once

#include <map>
#include <string>
#include <vector>

#include "desalg/compositions.hpp"
#include "desalg/permutations.hpp"
#include "desalg/rational.hpp"

namespace desalg {

// Element of the rational group algebra of S_n: finitely many permutations
// with nonzero rational coefficients. Sparse; the map never stores zeros, so
// equality is structural. All stored permutations have size degree().
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n);

  int degree() const { return n_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Permutation& w) const;
  void add_term(const Permutation& w, const Rational& c);

  bool operator==(const GroupAlgebraElement&) const = default;

 private:
  int n_;
  std::map<Permutation, Rational> terms_;
};

// The basis element concentrated on w, coefficient 1.
GroupAlgebraElement delta(const Permutation& w);

GroupAlgebraElement add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement subtract(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement scale(const Rational& c, const GroupAlgebraElement& a);

// Convolution product: the bilinear extension of composition of
// permutations, (uw)(i) = u(w(i)).
GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

inline GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return add(a, b); }
inline GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return subtract(a, b); }
inline GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return convolve(a, b); }
inline GroupAlgebraElement operator*(const Rational& c, const GroupAlgebraElement& a) { return scale(c, a); }

// Sum of all w whose descent set lies inside set_of(alpha). These span the
// descent algebra inside k[S_n].
GroupAlgebraElement b_element(const Composition& alpha);

// Multiplicity of each B_gamma in B_alpha * B_beta: one contribution
// B_read(M) per nonnegative integer matrix M with column sums alpha and row
// sums beta.
std::map<Composition, long long> b_product_mackey(const Composition& alpha,
                                                  const Composition& beta);

// For beta refining gamma: the sum of all w preserving every gamma-block
// setwise and with descent set inside set_of(beta). Satisfies
// b_element(beta) == b_element(gamma) * b_blocked(gamma, beta).
GroupAlgebraElement b_blocked(const Composition& gamma, const Composition& beta);

// For alpha and beta with equal underlying partition: the permutation sending
// each alpha-block order-preservingly onto a beta-block of the same size
// (first unused match wins). Satisfies b_element(beta) * delta(w) ==
// b_element(alpha).
Permutation anagram_conjugator(const Composition& alpha, const Composition& beta);

// Coefficient vector of length n! indexed by lex_rank, and its inverse.
std::vector<Rational> dense_coefficients(const GroupAlgebraElement& a);
GroupAlgebraElement element_from_dense(int n, const std::vector<Rational>& coeffs);

// Signed sum in lex order of permutations: "12 + 2·21", "123 - 132",
// coefficient 1 suppressed, "0" for the zero element.
std::string to_string(const GroupAlgebraElement& a);

}  // namespace desalg
