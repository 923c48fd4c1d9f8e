// Permutation arithmetic and the left-to-right-minima statistics. The LRM
// claims are checked both on the worked nine-letter example and exhaustively
// against direct rescans.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "desalg/compositions.hpp"
#include "desalg/permutations.hpp"

using namespace desalg;

namespace {

Permutation perm(std::vector<int> one_line) { return Permutation(std::move(one_line)); }

// Direct rescan: walk the one-line word, record every strict new minimum.
std::vector<int> minima_by_scan(const Permutation& w) {
  std::vector<int> out;
  int running = w.size() + 1;
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) < running) {
      running = w(i);
      out.push_back(running);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("construction validates one-line words") {
  CHECK(perm({2, 1, 3})(1) == 2);
  CHECK(perm({}).size() == 0);
  CHECK_THROWS_AS(perm({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(perm({1, 3}), std::invalid_argument);
}

TEST_CASE("composition applies the right factor first") {
  Permutation u = perm({2, 3, 1}), w = perm({2, 1, 3});
  CHECK(compose(u, w) == perm({3, 2, 1}));  // (uw)(i) = u(w(i))
  CHECK(compose(w, u) == perm({1, 3, 2}));
  for (int n = 0; n <= 5; ++n) {
    Permutation id = identity_permutation(n);
    for (const auto& v : all_permutations(n)) {
      CHECK(compose(v, id) == v);
      CHECK(compose(id, v) == v);
      CHECK(compose(v, inverse(v)) == id);
      CHECK(compose(inverse(v), v) == id);
    }
  }
  CHECK(inverse(parse_permutation("672491853")) == parse_permutation("639481275"));
}

TEST_CASE("factorial and lex ranking") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial(21), std::out_of_range);
  CHECK(from_lex_rank(3, 0) == perm({1, 2, 3}));
  CHECK(from_lex_rank(3, 5) == perm({3, 2, 1}));
  CHECK(lex_rank(perm({3, 2, 1})) == 5);
  for (int n = 0; n <= 5; ++n) {
    auto all = all_permutations(n);
    CHECK(all.size() == factorial(n));
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (std::uint64_t r = 0; r < all.size(); ++r) {
      CHECK(all[r] == from_lex_rank(n, r));
      CHECK(lex_rank(all[r]) == r);
      CHECK(lex_less(all[r], all[(r + 1) % all.size()]) == (r + 1 < all.size()));
    }
  }
  CHECK_THROWS_AS(all_permutations(9), std::length_error);
}

TEST_CASE("descent sets") {
  CHECK(descent_set(parse_permutation("672491853")) == std::vector<int>{2, 5, 7, 8});
  CHECK(descent_set(identity_permutation(4)).empty());
  CHECK(descent_set(perm({3, 2, 1})) == std::vector<int>{1, 2});
}

TEST_CASE("the nine-letter LRM example") {
  Permutation w = parse_permutation("672491853");
  CHECK(lrm(w) == std::vector<int>{1, 2, 6});
  CHECK(lrm_prime(w) == std::vector<int>{1, 5});
  CHECK(clrm_prime(w) == Composition({1, 4, 4}));
  CHECK(lrm_sequence(w) == std::vector<int>{6, 2, 1});
  CHECK(lrm(inverse(w)) == std::vector<int>{1, 3, 6});
}

TEST_CASE("LRM edge shapes") {
  CHECK(lrm(identity_permutation(5)) == std::vector<int>{1});
  CHECK(lrm_prime(identity_permutation(5)).empty());
  CHECK(clrm_prime(identity_permutation(5)) == Composition({5}));
  CHECK(lrm(perm({5, 4, 3, 2, 1})) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(clrm_prime(perm({5, 4, 3, 2, 1})) == Composition({1, 1, 1, 1, 1}));
  CHECK(lrm(perm({})).empty());
  CHECK(clrm_prime(perm({})) == Composition(std::vector<int>{}));
}

TEST_CASE("lrm agrees with a direct rescan and with lrm_sequence") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      std::vector<int> scanned = minima_by_scan(w);
      CHECK(lrm_sequence(w) == scanned);
      std::vector<int> increasing(scanned.rbegin(), scanned.rend());
      CHECK(lrm(w) == increasing);
    }
  }
}

TEST_CASE("minima of the inverse sit at the minima positions") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      std::vector<int> image;
      for (int l : lrm(inverse(w))) image.push_back(w(l));
      std::sort(image.begin(), image.end());
      CHECK(image == lrm(w));
    }
  }
}

TEST_CASE("v-shape detection over an index window") {
  Permutation w = perm({5, 3, 1, 2, 4});
  CHECK(has_v_shape_on(w, 1, 5) == 3);
  CHECK(has_v_shape_on(w, 2, 4) == 3);
  CHECK(has_v_shape_on(w, 3, 5) == 3);   // increasing tail: valley at the start
  CHECK(has_v_shape_on(w, 1, 3) == 3);   // decreasing run: valley at the end
  CHECK(has_v_shape_on(w, 2, 2) == 2);
  CHECK_FALSE(has_v_shape_on(perm({5, 1, 3, 2, 4}), 1, 5).has_value());
  CHECK_FALSE(has_v_shape_on(perm({1, 3, 2}), 1, 3).has_value());
}

TEST_CASE("permutation strings round-trip") {
  CHECK(to_string(perm({6, 7, 2, 4, 9, 1, 8, 5, 3})) == "672491853");
  CHECK(to_string(perm({})) == "()");
  CHECK(parse_permutation("()") == perm({}));
  std::vector<int> big{10, 9, 8, 7, 6, 5, 4, 3, 2, 1};
  CHECK(to_string(perm(big)) == "10,9,8,7,6,5,4,3,2,1");
  CHECK(parse_permutation("10,9,8,7,6,5,4,3,2,1") == perm(big));
  CHECK_THROWS_AS(parse_permutation("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("11"), std::invalid_argument);
  for (const auto& w : all_permutations(4)) CHECK(parse_permutation(to_string(w)) == w);
}
