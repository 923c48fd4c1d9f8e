#include "desalg/filtration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace desalg {

namespace {

void check_dense_guard(int n) {
  if (n > 6) throw std::length_error("dense group algebra work is capped at n = 6");
}

}  // namespace

std::vector<LrmBasisElement> lrm_basis(int n) {
  check_dense_guard(n);
  std::vector<LrmBasisElement> out;
  out.reserve(factorial(n));
  // One b_element per distinct cLRM' shape, not per permutation.
  std::map<Composition, GroupAlgebraElement> b_cache;
  for (const Permutation& w : all_permutations(n)) {
    Composition shape = clrm_prime(w);
    auto it = b_cache.find(shape);
    if (it == b_cache.end()) it = b_cache.emplace(shape, b_element(shape)).first;
    out.push_back(LrmBasisElement{w, shape, convolve(it->second, delta(w))});
  }
  return out;
}

std::map<Permutation, Rational> expand_in_lrm_basis(
    const GroupAlgebraElement& x, const std::vector<LrmBasisElement>& basis) {
  if (basis.size() != factorial(x.degree())) {
    throw std::invalid_argument("basis size mismatch");
  }
  std::map<Permutation, Rational> coords;
  GroupAlgebraElement rest = x;
  size_t steps = 0;
  const size_t cap = basis.size() * basis.size() + 1;
  while (!rest.is_zero()) {
    if (++steps > cap) {
      throw std::runtime_error("LRM expansion did not terminate");
    }
    const auto& [w, c] = *rest.terms().rbegin();
    Rational coeff = c;
    coords[w] += coeff;
    rest = subtract(rest, scale(coeff, basis[lex_rank(w)].value));
  }
  return coords;
}

SubspaceBasis r_alpha(const Composition& alpha) {
  const int n = alpha.weight();
  check_dense_guard(n);
  GroupAlgebraElement b = b_element(alpha);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(factorial(n));
  for (const Permutation& w : all_permutations(n)) {
    rows.push_back(dense_coefficients(convolve(b, delta(w))));
  }
  return rref(RationalMatrix::from_rows(std::move(rows), factorial(n)));
}

SubspaceBasis s_alpha(const Composition& alpha) {
  return s_alpha(alpha, lrm_basis(alpha.weight()));
}

SubspaceBasis s_alpha(const Composition& alpha, const std::vector<LrmBasisElement>& basis) {
  const int n = alpha.weight();
  check_dense_guard(n);
  Partition target = underlying_partition(alpha);
  std::vector<std::vector<Rational>> rows;
  for (const LrmBasisElement& e : basis) {
    if (partition_refines(underlying_partition(e.shape), target)) {
      rows.push_back(dense_coefficients(e.value));
    }
  }
  return rref(RationalMatrix::from_rows(std::move(rows), factorial(n)));
}

SubspaceBasis s_prime_alpha(const Composition& alpha) {
  return s_prime_alpha(alpha, lrm_basis(alpha.weight()));
}

SubspaceBasis s_prime_alpha(const Composition& alpha,
                            const std::vector<LrmBasisElement>& basis) {
  const int n = alpha.weight();
  check_dense_guard(n);
  std::vector<std::vector<Rational>> rows;
  for (const LrmBasisElement& e : basis) {
    if (refines(e.shape, alpha)) {
      rows.push_back(dense_coefficients(e.value));
    }
  }
  return rref(RationalMatrix::from_rows(std::move(rows), factorial(n)));
}

std::vector<DimsRow> dims_table(int n) {
  check_dense_guard(n);
  std::vector<LrmBasisElement> basis = lrm_basis(n);
  std::vector<DimsRow> out;
  for (const Composition& alpha : compositions_of(n)) {
    out.push_back(DimsRow{alpha, underlying_partition(alpha),
                          r_alpha(alpha).rank(), s_alpha(alpha, basis).rank(),
                          s_prime_alpha(alpha, basis).rank()});
  }
  return out;
}

GroupAlgebraElement expand_sigma(const SigmaElement& a) {
  GroupAlgebraElement out(a.n);
  for (const auto& [alpha, c] : a.coeffs) {
    if (alpha.weight() != a.n) throw std::invalid_argument("coefficient key has wrong weight");
    out = add(out, scale(c, b_element(alpha)));
  }
  return out;
}

LeftMultResult left_mult_matrix(const SigmaElement& a) {
  const int n = a.n;
  check_dense_guard(n);
  std::vector<LrmBasisElement> basis = lrm_basis(n);
  const size_t nf = basis.size();

  // Order: strictly finer cLRM' partition classes first. Strict refinement
  // increases the part count, so partition length descending is a linear
  // extension; partition lex then w lex make it deterministic.
  std::vector<size_t> order_idx(nf);
  for (size_t i = 0; i < nf; ++i) order_idx[i] = i;
  std::vector<Partition> cls(nf);
  for (size_t i = 0; i < nf; ++i) cls[i] = underlying_partition(basis[i].shape);
  std::sort(order_idx.begin(), order_idx.end(), [&](size_t x, size_t y) {
    if (cls[x].length() != cls[y].length()) return cls[x].length() > cls[y].length();
    if (cls[x] != cls[y]) return cls[x] < cls[y];
    return basis[x].w < basis[y].w;
  });
  std::vector<size_t> pos(nf);
  for (size_t j = 0; j < nf; ++j) pos[order_idx[j]] = j;

  GroupAlgebraElement ax = expand_sigma(a);
  RationalMatrix m(nf, nf);
  bool triangular = true;
  for (size_t j = 0; j < nf; ++j) {
    const LrmBasisElement& e = basis[order_idx[j]];
    auto coords = expand_in_lrm_basis(convolve(ax, e.value), basis);
    for (const auto& [u, c] : coords) {
      size_t i = pos[lex_rank(u)];
      m.at(i, j) = c;
      if (i > j) triangular = false;
    }
  }

  LeftMultResult res{std::vector<Permutation>(), std::move(m), triangular, {}, {}};
  res.order.reserve(nf);
  for (size_t j = 0; j < nf; ++j) {
    res.order.push_back(basis[order_idx[j]].w);
    res.diagonal.push_back(res.matrix.at(j, j));
    Rational pred(0);
    for (const auto& [alpha, c] : a.coeffs) {
      pred += c * Rational(static_cast<long>(eta(basis[order_idx[j]].shape, alpha)));
    }
    res.predicted_diagonal.push_back(pred);
  }
  return res;
}

std::vector<std::pair<Rational, size_t>> eigenvalue_multiset(const LeftMultResult& r) {
  std::map<Rational, size_t> mult;
  for (const Rational& d : r.diagonal) ++mult[d];
  std::vector<std::pair<Rational, size_t>> out(mult.rbegin(), mult.rend());
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::set<Partition> seen;
  for (const Composition& alpha : compositions_of(n)) {
    seen.insert(underlying_partition(alpha));
  }
  return std::vector<Partition>(seen.begin(), seen.end());
}

Composition partition_as_composition(const Partition& lambda) {
  return Composition(lambda.parts());
}

}  // namespace desalg
