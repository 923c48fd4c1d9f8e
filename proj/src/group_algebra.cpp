#include "desalg/group_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace desalg {

GroupAlgebraElement::GroupAlgebraElement(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative degree");
}

Rational GroupAlgebraElement::coefficient(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& w, const Rational& c) {
  if (w.size() != n_) throw std::invalid_argument("term size mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement delta(const Permutation& w) {
  GroupAlgebraElement e(w.size());
  e.add_term(w, 1);
  return e;
}

GroupAlgebraElement add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  GroupAlgebraElement out = a;
  for (const auto& [w, c] : b.terms()) out.add_term(w, c);
  return out;
}

GroupAlgebraElement subtract(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  GroupAlgebraElement out = a;
  for (const auto& [w, c] : b.terms()) out.add_term(w, -c);
  return out;
}

GroupAlgebraElement scale(const Rational& c, const GroupAlgebraElement& a) {
  GroupAlgebraElement out(a.degree());
  if (c == 0) return out;
  for (const auto& [w, cw] : a.terms()) out.add_term(w, c * cw);
  return out;
}

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  GroupAlgebraElement out(a.degree());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [w, cw] : b.terms()) {
      out.add_term(compose(u, w), cu * cw);
    }
  }
  return out;
}

GroupAlgebraElement b_element(const Composition& alpha) {
  const int n = alpha.weight();
  std::vector<int> cuts = set_of(alpha);
  GroupAlgebraElement out(n);
  for (const Permutation& w : all_permutations(n)) {
    std::vector<int> des = descent_set(w);
    if (std::includes(cuts.begin(), cuts.end(), des.begin(), des.end())) {
      out.add_term(w, 1);
    }
  }
  return out;
}

std::map<Composition, long long> b_product_mackey(const Composition& alpha,
                                                  const Composition& beta) {
  if (alpha.weight() != beta.weight()) {
    throw std::invalid_argument("b_product_mackey: weights differ");
  }
  std::map<Composition, long long> mult;
  for (const MarginMatrix& m : matrices_with_margins(alpha, beta)) {
    ++mult[read(m)];
  }
  return mult;
}

GroupAlgebraElement b_blocked(const Composition& gamma, const Composition& beta) {
  if (!refines(beta, gamma)) {
    throw std::invalid_argument("b_blocked: beta must refine gamma");
  }
  const int n = gamma.weight();
  std::vector<int> cuts = set_of(beta);
  auto gamma_blocks = blocks(gamma);
  GroupAlgebraElement out(n);
  std::vector<int> one_line(n);
  // Fill the gamma-blocks one at a time with permutations of their own
  // values; every block-preserving w arises exactly once.
  auto rec = [&](auto&& self, size_t bi) -> void {
    if (bi == gamma_blocks.size()) {
      Permutation w(one_line);
      std::vector<int> des = descent_set(w);
      if (std::includes(cuts.begin(), cuts.end(), des.begin(), des.end())) {
        out.add_term(w, 1);
      }
      return;
    }
    auto [lo, hi] = gamma_blocks[bi];
    std::vector<int> vals(hi - lo + 1);
    for (int i = 0; i < hi - lo + 1; ++i) vals[i] = lo + i;
    do {
      for (int i = 0; i < hi - lo + 1; ++i) one_line[lo - 1 + i] = vals[i];
      self(self, bi + 1);
    } while (std::next_permutation(vals.begin(), vals.end()));
    for (int i = 0; i < hi - lo + 1; ++i) one_line[lo - 1 + i] = lo + i;
  };
  rec(rec, 0);
  return out;
}

Permutation anagram_conjugator(const Composition& alpha, const Composition& beta) {
  if (underlying_partition(alpha) != underlying_partition(beta)) {
    throw std::invalid_argument("anagram_conjugator: not anagrams");
  }
  auto ab = blocks(alpha);
  auto bb = blocks(beta);
  std::vector<bool> used(bb.size(), false);
  std::vector<int> one_line(alpha.weight());
  for (const auto& [alo, ahi] : ab) {
    for (size_t j = 0; j < bb.size(); ++j) {
      auto [blo, bhi] = bb[j];
      if (used[j] || bhi - blo != ahi - alo) continue;
      used[j] = true;
      for (int i = 0; i <= ahi - alo; ++i) one_line[alo - 1 + i] = blo + i;
      break;
    }
  }
  return Permutation(std::move(one_line));
}

std::vector<Rational> dense_coefficients(const GroupAlgebraElement& a) {
  std::vector<Rational> v(factorial(a.degree()), Rational(0));
  for (const auto& [w, c] : a.terms()) v[lex_rank(w)] = c;
  return v;
}

GroupAlgebraElement element_from_dense(int n, const std::vector<Rational>& coeffs) {
  if (coeffs.size() != factorial(n)) throw std::invalid_argument("dense size mismatch");
  GroupAlgebraElement out(n);
  for (size_t r = 0; r < coeffs.size(); ++r) {
    if (coeffs[r] != 0) out.add_term(from_lex_rank(n, r), coeffs[r]);
  }
  return out;
}

std::string to_string(const GroupAlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (abs != 1) os << to_string(abs) << "·";
    os << to_string(w);
    first = false;
  }
  return os.str();
}

}  // namespace desalg
