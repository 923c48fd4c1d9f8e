// Compositions, the two refinement orders, eta counts and margin matrices,
// checked against brute-force oracles small enough to trust by inspection.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "desalg/compositions.hpp"

using namespace desalg;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

// Reference refinement test: walk beta summing consecutive parts, each run
// must close exactly on the next part of alpha.
bool refines_by_runs(const Composition& beta, const Composition& alpha) {
  size_t bi = 0;
  for (int target : alpha.parts()) {
    int acc = 0;
    while (acc < target && bi < beta.parts().size()) acc += beta.parts()[bi++];
    if (acc != target) return false;
  }
  return bi == beta.parts().size();
}

// Reference eta: enumerate every function [len(beta)] -> [len(alpha)].
long long eta_by_functions(const Composition& beta, const Composition& alpha) {
  const size_t lb = beta.parts().size(), la = alpha.parts().size();
  if (beta.weight() != alpha.weight()) return 0;
  if (lb == 0) return la == 0 ? 1 : 0;
  if (la == 0) return 0;
  std::vector<size_t> f(lb, 0);
  long long count = 0;
  for (;;) {
    std::vector<int> sums(la, 0);
    for (size_t i = 0; i < lb; ++i) sums[f[i]] += beta.parts()[i];
    bool ok = true;
    for (size_t j = 0; j < la; ++j) ok = ok && sums[j] == alpha.parts()[j];
    if (ok) ++count;
    size_t i = 0;
    while (i < lb && f[i] == la - 1) f[i++] = 0;
    if (i == lb) break;
    ++f[i];
  }
  return count;
}

// Reference margin-matrix enumeration: all entry tuples up to the weight.
std::set<std::vector<std::vector<int>>> matrices_by_force(const Composition& alpha,
                                                          const Composition& beta) {
  const size_t q = beta.parts().size(), p = alpha.parts().size();
  std::set<std::vector<std::vector<int>>> out;
  const size_t cells = p * q;
  std::vector<int> flat(cells, 0);
  const int top = alpha.weight();
  for (;;) {
    std::vector<std::vector<int>> m(q, std::vector<int>(p, 0));
    for (size_t k = 0; k < cells; ++k) m[k / p][k % p] = flat[k];
    bool ok = true;
    for (size_t r = 0; r < q && ok; ++r) {
      int s = 0;
      for (size_t c = 0; c < p; ++c) s += m[r][c];
      ok = s == beta.parts()[r];
    }
    for (size_t c = 0; c < p && ok; ++c) {
      int s = 0;
      for (size_t r = 0; r < q; ++r) s += m[r][c];
      ok = s == alpha.parts()[c];
    }
    if (ok) out.insert(m);
    size_t k = 0;
    while (k < cells && flat[k] == top) flat[k++] = 0;
    if (k == cells) break;
    ++flat[k];
  }
  return out;
}

}  // namespace

TEST_CASE("compositions_of enumerates in lex order") {
  CHECK(compositions_of(0).size() == 1);
  CHECK(compositions_of(0)[0].parts().empty());
  CHECK(compositions_of(1) == std::vector<Composition>{comp({1})});
  for (int n = 1; n <= 7; ++n) {
    auto cs = compositions_of(n);
    CHECK(cs.size() == (size_t{1} << (n - 1)));
    CHECK(std::is_sorted(cs.begin(), cs.end()));
    CHECK(std::adjacent_find(cs.begin(), cs.end()) == cs.end());
    for (const auto& c : cs) CHECK(c.weight() == n);
  }
  auto c3 = compositions_of(3);
  CHECK(c3 == std::vector<Composition>{comp({1, 1, 1}), comp({1, 2}), comp({2, 1}),
                                       comp({3})});
}

TEST_CASE("set_of and comp_of invert each other") {
  CHECK(set_of(comp({1, 4, 4})) == std::vector<int>{1, 5});
  CHECK(comp_of({5, 1}, 9) == comp({1, 4, 4}));
  CHECK(set_of(comp({3})).empty());
  CHECK(comp_of({}, 3) == comp({3}));
  for (int n = 0; n <= 6; ++n) {
    for (const auto& c : compositions_of(n)) CHECK(comp_of(set_of(c), n) == c);
    for (unsigned mask = 0; n >= 1 && mask < (1u << (n - 1)); ++mask) {
      std::vector<int> s;
      for (int i = 1; i < n; ++i) {
        if (mask & (1u << (i - 1))) s.push_back(i);
      }
      CHECK(set_of(comp_of(s, n)) == s);
    }
  }
  CHECK_THROWS_AS(comp_of({3}, 3), std::invalid_argument);   // n-1 bound
  CHECK_THROWS_AS(comp_of({1, 1}, 3), std::invalid_argument);  // duplicate
}

TEST_CASE("blocks are the consecutive intervals") {
  using P = std::pair<int, int>;
  CHECK(blocks(comp({2, 3})) == std::vector<P>{{1, 2}, {3, 5}});
  CHECK(blocks(comp({1, 1})) == std::vector<P>{{1, 1}, {2, 2}});
  CHECK(blocks(comp({})).empty());
}

TEST_CASE("composition refinement matches the run oracle") {
  for (int n = 0; n <= 6; ++n) {
    auto cs = compositions_of(n);
    for (const auto& b : cs) {
      for (const auto& a : cs) CHECK(refines(b, a) == refines_by_runs(b, a));
    }
  }
  CHECK(refines(comp({1, 1, 2}), comp({2, 2})));
  CHECK_FALSE(refines(comp({1, 2, 1}), comp({2, 2})));
  CHECK_THROWS_AS(refines(comp({2}), comp({3})), std::invalid_argument);
}

TEST_CASE("partition refinement agrees with positive eta and known cases") {
  for (int n = 0; n <= 7; ++n) {
    std::set<Partition> parts;
    for (const auto& c : compositions_of(n)) parts.insert(underlying_partition(c));
    for (const auto& lam : parts) {
      for (const auto& mu : parts) {
        Composition cl(lam.parts()), cm(mu.parts());
        CHECK(partition_refines(lam, mu) == (eta(cl, cm) > 0));
      }
    }
  }
  auto part = [](std::vector<int> p) { return underlying_partition(comp(std::move(p))); };
  CHECK(partition_refines(part({2, 2, 1, 1}), part({4, 2})));
  CHECK_FALSE(partition_refines(part({2, 2, 2}), part({3, 3})));
  CHECK_FALSE(partition_refines(part({3, 3}), part({4, 2})));
  CHECK(partition_refines(part({}), part({})));
}

TEST_CASE("eta matches the function-counting oracle") {
  for (int n = 0; n <= 5; ++n) {
    auto cs = compositions_of(n);
    for (const auto& b : cs) {
      for (const auto& a : cs) CHECK(eta(b, a) == eta_by_functions(b, a));
    }
  }
  CHECK(eta(comp({1, 1, 1}), comp({2, 1})) == 3);
  CHECK(eta(comp({2, 2}), comp({2, 2})) == 2);
  CHECK(eta(comp({1, 2}), comp({3})) == 1);
  CHECK(eta(comp({3}), comp({1, 2})) == 0);
  CHECK(eta(comp({2}), comp({3})) == 0);  // weight mismatch
  CHECK(eta(comp({}), comp({})) == 1);
  CHECK_THROWS_AS(eta(comp(std::vector<int>(13, 1)), comp({13})), std::length_error);
}

TEST_CASE("margin matrices carry the demanded margins and nothing is missed") {
  for (int n = 0; n <= 4; ++n) {
    auto cs = compositions_of(n);
    for (const auto& a : cs) {
      for (const auto& b : cs) {
        auto got = matrices_with_margins(a, b);
        for (const auto& m : got) {
          CHECK(m.col_sums() == a.parts());
          CHECK(m.row_sums() == b.parts());
        }
        if (a.parts().size() * b.parts().size() <= 6) {
          std::set<std::vector<std::vector<int>>> seen;
          for (const auto& m : got) seen.insert(m.entries());
          CHECK(seen.size() == got.size());
          CHECK(seen == matrices_by_force(a, b));
        }
      }
    }
  }
  CHECK(matrices_with_margins(comp({1, 1}), comp({1, 1})).size() == 2);
  CHECK(matrices_with_margins(comp({2}), comp({1, 1})).size() == 1);
}

TEST_CASE("read concatenates rows and drops zeros") {
  auto ms = matrices_with_margins(comp({2, 2}), comp({3, 1}));
  std::set<Composition> reads;
  for (const auto& m : ms) reads.insert(read(m));
  CHECK(reads == std::set<Composition>{comp({2, 1, 1}), comp({1, 2, 1})});
  for (const auto& m : ms) {
    CHECK(refines(read(m), comp({3, 1})));
    CHECK(partition_refines(underlying_partition(read(m)),
                            underlying_partition(comp({2, 2}))));
  }
}

TEST_CASE("strings round-trip") {
  CHECK(to_string(comp({2, 1, 1})) == "(2,1,1)");
  CHECK(to_string(comp({})) == "()");
  CHECK(parse_composition("2,1,1") == comp({2, 1, 1}));
  CHECK(parse_composition("(2,1,1)") == comp({2, 1, 1}));
  CHECK(to_string(underlying_partition(comp({1, 2, 1}))) == "(2,1,1)");
  CHECK(to_string_subset({3, 1}) == "{1,3}");
  CHECK(to_string_subset({}) == "{}");
  CHECK_THROWS_AS(parse_composition("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_composition("0,1"), std::invalid_argument);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& c : compositions_of(n)) CHECK(parse_composition(to_string(c)) == c);
  }
}
