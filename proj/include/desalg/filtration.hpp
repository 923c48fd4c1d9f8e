#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "desalg/compositions.hpp"
#include "desalg/exact_linalg.hpp"
#include "desalg/group_algebra.hpp"
#include "desalg/permutations.hpp"
#include "desalg/rational.hpp"

namespace desalg {

// One member of the LRM basis: beta_w = B_{clrm_prime(w)} * w.
struct LrmBasisElement {
  Permutation w;
  Composition shape;          // clrm_prime(w)
  GroupAlgebraElement value;  // b_element(shape) * delta(w)
};

// All n! basis elements in lex order of w, so basis[lex_rank(w)].w == w.
// Refuses n > 6: the elements hold on the order of n!^2 terms.
std::vector<LrmBasisElement> lrm_basis(int n);

// Coordinates of x over {beta_w}. Each beta_w is w plus lex-smaller terms, so
// peeling the lex-largest remaining term of x names the next coordinate.
std::map<Permutation, Rational> expand_in_lrm_basis(
    const GroupAlgebraElement& x, const std::vector<LrmBasisElement>& basis);

// Row space of {B_alpha * delta_w : w in S_n}: the right ideal generated by
// B_alpha, as a subspace of the full group algebra.
SubspaceBasis r_alpha(const Composition& alpha);

// Span of the beta_w whose cLRM' composition has underlying partition
// refining that of alpha in the partition order.
SubspaceBasis s_alpha(const Composition& alpha);
SubspaceBasis s_alpha(const Composition& alpha, const std::vector<LrmBasisElement>& basis);

// Span of the beta_w whose cLRM' composition refines alpha as a composition.
// Contained in s_alpha(alpha), usually strictly.
SubspaceBasis s_prime_alpha(const Composition& alpha);
SubspaceBasis s_prime_alpha(const Composition& alpha, const std::vector<LrmBasisElement>& basis);

struct DimsRow {
  Composition alpha;
  Partition partition;
  size_t dim_r;
  size_t dim_s;
  size_t dim_s_prime;
};

// One row per composition of n, in lex order; shares one LRM basis across
// all rows.
std::vector<DimsRow> dims_table(int n);

// An element of the descent algebra through its B-basis coordinates.
struct SigmaElement {
  int n = 0;
  std::map<Composition, Rational> coeffs;
};

// Sum of coeff * b_element(alpha). Keys must be compositions of n.
GroupAlgebraElement expand_sigma(const SigmaElement& a);

// Left multiplication by a in the LRM basis. Columns follow `order`, which
// lists S_n with strictly finer cLRM' partition classes first (partition
// length descending, then partition lex, then w lex); column j holds the
// coordinates of a * beta_{order[j]} over {beta_{order[i]}}.
struct LeftMultResult {
  std::vector<Permutation> order;
  RationalMatrix matrix;
  bool triangular;  // no nonzero entry strictly below the diagonal
  std::vector<Rational> diagonal;
  std::vector<Rational> predicted_diagonal;  // sum_alpha coeff_alpha * eta(clrm_prime(w), alpha)
};

LeftMultResult left_mult_matrix(const SigmaElement& a);

// Distinct diagonal values with multiplicities, descending. For a triangular
// matrix these are the eigenvalues.
std::vector<std::pair<Rational, size_t>> eigenvalue_multiset(const LeftMultResult& r);

// The distinct underlying partitions of compositions of n, ascending.
std::vector<Partition> partitions_of(int n);

// Partition written as a composition (parts in decreasing order).
Composition partition_as_composition(const Partition& lambda);

}  // namespace desalg
