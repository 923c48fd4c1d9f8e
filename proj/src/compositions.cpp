#include "desalg/compositions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace desalg {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

MarginMatrix::MarginMatrix(std::vector<std::vector<int>> entries)
    : entries_(std::move(entries)) {
  size_t cols = entries_.empty() ? 0 : entries_[0].size();
  for (const auto& row : entries_) {
    if (row.size() != cols) throw std::invalid_argument("ragged margin matrix");
    for (int e : row) {
      if (e < 0) throw std::invalid_argument("negative margin matrix entry");
    }
  }
}

std::vector<int> MarginMatrix::row_sums() const {
  std::vector<int> sums;
  sums.reserve(entries_.size());
  for (const auto& row : entries_) {
    sums.push_back(std::accumulate(row.begin(), row.end(), 0));
  }
  return sums;
}

std::vector<int> MarginMatrix::col_sums() const {
  std::vector<int> sums(cols(), 0);
  for (const auto& row : entries_) {
    for (size_t c = 0; c < row.size(); ++c) sums[c] += row[c];
  }
  return sums;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative n");
  std::vector<Composition> out;
  std::vector<int> parts;
  // First part ascending, then recurse: yields lexicographic order.
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      parts.push_back(p);
      self(self, rest - p);
      parts.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::vector<int> set_of(const Composition& alpha) {
  std::vector<int> cuts;
  int sum = 0;
  const auto& parts = alpha.parts();
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    sum += parts[i];
    cuts.push_back(sum);
  }
  return cuts;
}

Composition comp_of(const std::vector<int>& subset, int n) {
  if (n < 0) throw std::invalid_argument("comp_of: negative n");
  std::vector<int> cuts = subset;
  std::sort(cuts.begin(), cuts.end());
  if (std::adjacent_find(cuts.begin(), cuts.end()) != cuts.end()) {
    throw std::invalid_argument("comp_of: duplicate cut");
  }
  for (int c : cuts) {
    if (c < 1 || c > n - 1) throw std::invalid_argument("comp_of: cut outside [n-1]");
  }
  std::vector<int> parts;
  int prev = 0;
  for (int c : cuts) {
    parts.push_back(c - prev);
    prev = c;
  }
  if (n > 0) parts.push_back(n - prev);
  return Composition(parts);
}

std::vector<std::pair<int, int>> blocks(const Composition& alpha) {
  std::vector<std::pair<int, int>> out;
  int start = 1;
  for (int p : alpha.parts()) {
    out.emplace_back(start, start + p - 1);
    start += p;
  }
  return out;
}

Partition underlying_partition(const Composition& alpha) {
  Partition lambda;
  lambda.parts_ = alpha.parts();
  std::sort(lambda.parts_.begin(), lambda.parts_.end(), std::greater<int>());
  lambda.weight_ = alpha.weight();
  return lambda;
}

bool refines(const Composition& beta, const Composition& alpha) {
  if (beta.weight() != alpha.weight()) {
    throw std::invalid_argument("refines: weights differ");
  }
  std::vector<int> sb = set_of(beta), sa = set_of(alpha);
  return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

namespace {

// Backtracking cover: can the remaining multiset of lambda parts be split
// into groups summing to mu_j, mu_{j+1}, ...? Multiset kept as parallel
// (value, count) vectors, values distinct; memoized on (j, counts).
struct CoverSearch {
  const std::vector<int>& mu;
  std::vector<int> values;
  std::vector<int> counts;
  std::map<std::pair<size_t, std::vector<int>>, bool> memo;

  bool cover(size_t j) {
    if (j == mu.size()) {
      return std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; });
    }
    auto key = std::make_pair(j, counts);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = pick(j, 0, mu[j]);
    memo.emplace(std::move(key), ok);
    return ok;
  }

  // Choose how many copies of values[v..] go into group j; target is what is
  // still needed to reach mu_j.
  bool pick(size_t j, size_t v, int target) {
    if (target == 0) return cover(j + 1);
    if (v == values.size()) return false;
    int max_take = std::min(counts[v], target / values[v]);
    for (int take = max_take; take >= 0; --take) {
      counts[v] -= take;
      bool ok = pick(j, v + 1, target - take * values[v]);
      counts[v] += take;
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

bool partition_refines(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw std::invalid_argument("partition_refines: weights differ");
  }
  CoverSearch search{mu.parts(), {}, {}, {}};
  for (int p : lambda.parts()) {
    if (!search.values.empty() && search.values.back() == p) {
      ++search.counts.back();
    } else {
      search.values.push_back(p);
      search.counts.push_back(1);
    }
  }
  return search.cover(0);
}

long long eta(const Composition& beta, const Composition& alpha) {
  if (beta.weight() != alpha.weight()) return 0;
  if (beta.length() > 12) throw std::length_error("eta: beta longer than 12 parts");
  const auto& b = beta.parts();
  const auto& a = alpha.parts();
  if (b.empty()) return a.empty() ? 1 : 0;
  if (a.empty()) return 0;
  std::vector<int> partial(a.size(), 0);
  long long count = 0;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == b.size()) {
      // partial[j] <= a[j] throughout and the totals agree, so equality holds.
      ++count;
      return;
    }
    for (size_t j = 0; j < a.size(); ++j) {
      if (partial[j] + b[i] > a[j]) continue;
      partial[j] += b[i];
      self(self, i + 1);
      partial[j] -= b[i];
    }
  };
  rec(rec, 0);
  return count;
}

std::vector<MarginMatrix> matrices_with_margins(const Composition& alpha,
                                                const Composition& beta) {
  if (alpha.weight() != beta.weight()) {
    throw std::invalid_argument("matrices_with_margins: weights differ");
  }
  const int R = beta.length(), C = alpha.length();
  std::vector<MarginMatrix> out;
  if (R == 0 || C == 0) {
    if (alpha.weight() == 0 && R == 0) out.emplace_back(std::vector<std::vector<int>>{});
    return out;
  }
  std::vector<int> col_rem = alpha.parts();
  std::vector<std::vector<int>> m(R, std::vector<int>(C, 0));
  // Row-major backtracking, entries ascending: emits matrices in lex order of
  // the row-major sequence. col_tail[c] = sum of col_rem from column c on,
  // maintained incrementally for the capacity prune.
  auto rec = [&](auto&& self, int r, int c, int row_rem, long long tail_cap) -> void {
    if (c == C) {
      if (row_rem != 0) return;
      if (r + 1 == R) {
        out.emplace_back(m);
      } else {
        long long cap = 0;
        for (int x : col_rem) cap += x;
        self(self, r + 1, 0, beta.parts()[r + 1], cap);
      }
      return;
    }
    long long rest_cap = tail_cap - col_rem[c];
    int hi = std::min(row_rem, col_rem[c]);
    for (int e = 0; e <= hi; ++e) {
      if (row_rem - e > rest_cap) continue;
      m[r][c] = e;
      col_rem[c] -= e;
      self(self, r, c + 1, row_rem - e, rest_cap);
      col_rem[c] += e;
      m[r][c] = 0;
    }
  };
  long long cap0 = 0;
  for (int x : col_rem) cap0 += x;
  rec(rec, 0, 0, beta.parts()[0], cap0);
  return out;
}

Composition read(const MarginMatrix& m) {
  std::vector<int> parts;
  for (const auto& row : m.entries()) {
    for (int e : row) {
      if (e != 0) parts.push_back(e);
    }
  }
  return Composition(parts);
}

namespace {

std::string join_parts(const std::vector<int>& parts, char open, char close) {
  std::ostringstream os;
  os << open;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << close;
  return os.str();
}

}  // namespace

std::string to_string(const Composition& alpha) {
  return join_parts(alpha.parts(), '(', ')');
}

std::string to_string(const Partition& lambda) {
  return join_parts(lambda.parts(), '(', ')');
}

Composition parse_composition(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!s.empty()) {
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t pos = 0;
      int p;
      try {
        p = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad composition part: '" + tok + "'");
      }
      if (pos != tok.size()) throw std::invalid_argument("bad composition part: '" + tok + "'");
      parts.push_back(p);
    }
    if (s.back() == ',') throw std::invalid_argument("trailing comma in composition");
  }
  return Composition(parts);
}

std::string to_string_subset(const std::vector<int>& subset) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  return join_parts(s, '{', '}');
}

}  // namespace desalg
