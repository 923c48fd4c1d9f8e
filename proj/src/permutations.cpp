#include "desalg/permutations.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace desalg {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size(), false);
  for (int v : one_line_) {
    if (v < 1 || v > size() || seen[v - 1]) {
      throw std::invalid_argument("not a permutation of [n]");
    }
    seen[v - 1] = true;
  }
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("permutation argument");
  return one_line_[i - 1];
}

Permutation identity_permutation(int n) {
  if (n < 0) throw std::invalid_argument("negative n");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation compose(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("compose: sizes differ");
  std::vector<int> v(w.size());
  for (int i = 1; i <= w.size(); ++i) v[i - 1] = u(w(i));
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> v(w.size());
  for (int i = 1; i <= w.size(); ++i) v[w(i) - 1] = i;
  return Permutation(std::move(v));
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial argument");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t lex_rank(const Permutation& w) {
  const int n = w.size();
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (w(j) < w(i)) ++smaller_after;
    }
    rank += smaller_after * factorial(n - i);
  }
  return rank;
}

Permutation from_lex_rank(int n, std::uint64_t rank) {
  if (n < 0 || rank >= factorial(n)) throw std::out_of_range("lex rank");
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> v;
  v.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t f = factorial(i);
    size_t k = rank / f;
    rank %= f;
    v.push_back(pool[k]);
    pool.erase(pool.begin() + k);
  }
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int n, bool unguarded) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > 8 && !unguarded) {
    throw std::length_error("all_permutations: n > 8 needs unguarded=true");
  }
  if (n > 10) throw std::length_error("all_permutations: n > 10 refused");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool lex_less(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("lex_less: sizes differ");
  return u < w;
}

std::optional<int> has_v_shape_on(const Permutation& w, int i, int j) {
  if (i < 1 || i > j || j > w.size()) throw std::out_of_range("bad interval");
  int m = i;
  while (m < j && w(m) > w(m + 1)) ++m;
  for (int k = m; k < j; ++k) {
    if (w(k) >= w(k + 1)) return std::nullopt;
  }
  return m;
}

std::vector<int> descent_set(const Permutation& w) {
  std::vector<int> des;
  for (int i = 1; i + 1 <= w.size(); ++i) {
    if (w(i) > w(i + 1)) des.push_back(i);
  }
  return des;
}

std::vector<int> lrm(const Permutation& w) {
  std::vector<int> mins;
  int running = w.size() + 1;
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) < running) {
      running = w(i);
      mins.push_back(running);
    }
  }
  std::reverse(mins.begin(), mins.end());
  return mins;
}

std::vector<int> lrm_prime(const Permutation& w) {
  std::vector<int> out;
  for (int l : lrm(w)) {
    if (l > 1) out.push_back(l - 1);
  }
  return out;
}

Composition clrm_prime(const Permutation& w) {
  return comp_of(lrm_prime(w), w.size());
}

std::vector<int> lrm_sequence(const Permutation& w) {
  std::vector<int> seq;
  Permutation wi = inverse(w);
  int prev = w.size() + 1;
  while (prev > 1) {
    // Leftmost position holding a value below prev; it exists since prev >= 2
    // and w is onto.
    int pos = w.size() + 1;
    for (int v = 1; v < prev; ++v) pos = std::min(pos, wi(v));
    prev = w(pos);
    seq.push_back(prev);
  }
  return seq;
}

std::string to_string(const Permutation& w) {
  if (w.size() == 0) return "()";
  std::ostringstream os;
  if (w.size() <= 9) {
    for (int i = 1; i <= w.size(); ++i) os << w(i);
  } else {
    for (int i = 1; i <= w.size(); ++i) {
      if (i > 1) os << ',';
      os << w(i);
    }
  }
  return os.str();
}

Permutation parse_permutation(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty permutation text");
  if (text == "()") return Permutation();
  std::vector<int> v;
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t pos = 0;
      int x;
      try {
        x = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad permutation entry: '" + tok + "'");
      }
      if (pos != tok.size()) throw std::invalid_argument("bad permutation entry: '" + tok + "'");
      v.push_back(x);
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad compact permutation digit");
      }
      v.push_back(c - '0');
    }
  }
  return Permutation(std::move(v));
}

}  // namespace desalg
