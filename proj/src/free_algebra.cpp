#include "desalg/free_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace desalg {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int l : letters_) {
    if (l < 1) throw std::invalid_argument("word letters must be positive");
  }
}

FreeAlgebraElement::FreeAlgebraElement(int alphabet) : alphabet_(alphabet) {
  if (alphabet < 0) throw std::invalid_argument("negative alphabet");
}

std::optional<int> FreeAlgebraElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.size();
  if (terms_.rbegin()->first.size() != d) return std::nullopt;
  return d;
}

Rational FreeAlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FreeAlgebraElement::add_term(const Word& w, const Rational& c) {
  for (int l : w.letters()) {
    if (l > alphabet_) throw std::invalid_argument("letter outside alphabet");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeAlgebraElement word_element(int alphabet, const Word& w) {
  FreeAlgebraElement e(alphabet);
  e.add_term(w, 1);
  return e;
}

FreeAlgebraElement add(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("alphabet mismatch");
  FreeAlgebraElement out = a;
  for (const auto& [w, c] : b.terms()) out.add_term(w, c);
  return out;
}

FreeAlgebraElement subtract(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("alphabet mismatch");
  FreeAlgebraElement out = a;
  for (const auto& [w, c] : b.terms()) out.add_term(w, -c);
  return out;
}

FreeAlgebraElement scale(const Rational& c, const FreeAlgebraElement& a) {
  FreeAlgebraElement out(a.alphabet());
  if (c == 0) return out;
  for (const auto& [w, cw] : a.terms()) out.add_term(w, c * cw);
  return out;
}

FreeAlgebraElement concat_product(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("alphabet mismatch");
  FreeAlgebraElement out(a.alphabet());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [w, cw] : b.terms()) {
      std::vector<int> letters = u.letters();
      letters.insert(letters.end(), w.letters().begin(), w.letters().end());
      out.add_term(Word(std::move(letters)), cu * cw);
    }
  }
  return out;
}

FreeAlgebraElement right_action(const FreeAlgebraElement& e, const Permutation& sigma) {
  FreeAlgebraElement out(e.alphabet());
  if (e.is_zero()) return out;
  if (e.degree() != sigma.size()) {
    throw std::invalid_argument("place action needs homogeneous degree = |sigma|");
  }
  for (const auto& [w, c] : e.terms()) {
    std::vector<int> letters(w.size());
    for (int i = 1; i <= sigma.size(); ++i) letters[i - 1] = w.letters()[sigma(i) - 1];
    out.add_term(Word(std::move(letters)), c);
  }
  return out;
}

FreeAlgebraElement right_action_by_algebra(const FreeAlgebraElement& e,
                                           const GroupAlgebraElement& a) {
  FreeAlgebraElement out(e.alphabet());
  if (e.is_zero() || a.is_zero()) return out;
  for (const auto& [sigma, c] : a.terms()) {
    out = add(out, scale(c, right_action(e, sigma)));
  }
  return out;
}

FreeAlgebraElement embed(const GroupAlgebraElement& a) {
  FreeAlgebraElement out(a.degree());
  for (const auto& [w, c] : a.terms()) out.add_term(Word(w.one_line()), c);
  return out;
}

std::optional<int> v_shape_valley(const std::vector<int>& letters) {
  const int k = static_cast<int>(letters.size());
  if (k == 0) return std::nullopt;
  int m = 1;
  while (m < k && letters[m - 1] > letters[m]) ++m;
  for (int i = m; i < k; ++i) {
    if (letters[i - 1] >= letters[i]) return std::nullopt;
  }
  return m;
}

namespace {

void check_letter_set(const std::vector<int>& s, int alphabet) {
  if (s.empty()) throw std::invalid_argument("empty letter set");
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > alphabet) throw std::invalid_argument("letter outside alphabet");
    if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("letters must increase");
  }
}

}  // namespace

FreeAlgebraElement dynkin(const std::vector<int>& s, int alphabet) {
  check_letter_set(s, alphabet);
  FreeAlgebraElement v = word_element(alphabet, Word({s[0]}));
  for (size_t i = 1; i < s.size(); ++i) {
    FreeAlgebraElement letter = word_element(alphabet, Word({s[i]}));
    v = subtract(concat_product(v, letter), concat_product(letter, v));
  }
  return v;
}

FreeAlgebraElement dynkin_vshape(const std::vector<int>& s, int alphabet) {
  check_letter_set(s, alphabet);
  FreeAlgebraElement out(alphabet);
  std::vector<int> letters = s;
  do {
    auto valley = v_shape_valley(letters);
    if (valley) {
      out.add_term(Word(letters), (*valley - 1) % 2 == 0 ? Rational(1) : Rational(-1));
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

FreeAlgebraElement v_alpha(const Composition& alpha) {
  const int n = alpha.weight();
  FreeAlgebraElement out = word_element(n, Word());
  for (const auto& [lo, hi] : blocks(alpha)) {
    std::vector<int> s(hi - lo + 1);
    for (int i = 0; i <= hi - lo; ++i) s[i] = lo + i;
    out = concat_product(out, dynkin(s, n));
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> ordered_set_partitions(
    const Composition& beta, const Composition& gamma) {
  if (beta.weight() != gamma.weight()) {
    throw std::invalid_argument("ordered_set_partitions: weights differ");
  }
  const int p = beta.length(), q = gamma.length();
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> label(p);
  std::vector<int> partial(q, 0);
  // Assign each position a block, lex order over label vectors; partial sums
  // prune early. Blocks come out increasing since positions are visited in
  // order.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == p) {
      std::vector<std::vector<int>> t(q);
      for (int k = 0; k < p; ++k) t[label[k]].push_back(k + 1);
      out.push_back(std::move(t));
      return;
    }
    for (int j = 0; j < q; ++j) {
      if (partial[j] + beta.parts()[i] > gamma.parts()[j]) continue;
      partial[j] += beta.parts()[i];
      label[i] = j;
      self(self, i + 1);
      partial[j] -= beta.parts()[i];
    }
  };
  if (q == 0) {
    if (p == 0) out.push_back({});
    return out;
  }
  rec(rec, 0);
  return out;
}

FreeAlgebraElement vb_rhs(const Composition& beta, const Composition& gamma) {
  const int n = beta.weight();
  if (gamma.weight() != n) throw std::invalid_argument("vb_rhs: weights differ");
  auto beta_blocks = blocks(beta);
  FreeAlgebraElement out(n);
  for (const auto& t : ordered_set_partitions(beta, gamma)) {
    FreeAlgebraElement prod = word_element(n, Word());
    for (const auto& block : t) {
      for (int idx : block) {
        auto [lo, hi] = beta_blocks[idx - 1];
        std::vector<int> s(hi - lo + 1);
        for (int i = 0; i <= hi - lo; ++i) s[i] = lo + i;
        prod = concat_product(prod, dynkin(s, n));
      }
    }
    out = add(out, prod);
  }
  return out;
}

std::optional<Permutation> as_permutation(const Word& w) {
  const int n = w.size();
  std::vector<bool> seen(n, false);
  for (int l : w.letters()) {
    if (l > n || seen[l - 1]) return std::nullopt;
    seen[l - 1] = true;
  }
  return Permutation(w.letters());
}

std::string to_string(const Word& w) {
  if (w.size() == 0) return "()";
  std::ostringstream os;
  for (size_t i = 0; i < w.letters().size(); ++i) {
    if (i) os << ' ';
    os << w.letters()[i];
  }
  return os.str();
}

std::string to_string(const FreeAlgebraElement& a) {
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
