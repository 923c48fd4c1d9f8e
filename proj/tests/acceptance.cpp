// Acceptance gate: eleven numbered criteria, one [PASS]/[FAIL] line each,
// nonzero exit if any fail. The default run covers everything at its stated
// scale; --extended instead runs the n = 6 span-equality sweep, one
// 720-dimensional reduction per partition class (expect minutes).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "desalg/compositions.hpp"
#include "desalg/filtration.hpp"
#include "desalg/free_algebra.hpp"
#include "desalg/group_algebra.hpp"
#include "desalg/permutations.hpp"
#include "desalg/verify.hpp"

using namespace desalg;

namespace {

int failures = 0;

void report(int id, const char* what, bool ok, double secs) {
  std::printf("[%s] %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, what, secs);
  if (!ok) ++failures;
}

bool suite_passes(const char* name, int lo, int hi) {
  bool ok = true;
  for (int n = lo; n <= hi; ++n) {
    Report r = run_suite(name, n);
    if (!r.all_pass()) {
      std::fputs(render_text(r).c_str(), stdout);
      ok = false;
    }
  }
  return ok;
}

bool dimension_table() {
  auto rows = dims_table(3);
  if (rows.size() != 4) return false;
  std::vector<size_t> want_r{1, 4, 4, 6}, want_sp{1, 3, 2, 6};
  bool ok = true;
  for (size_t i = 0; i < 4; ++i) {
    ok = ok && rows[i].dim_r == want_r[i] && rows[i].dim_s == want_r[i] &&
         rows[i].dim_s_prime == want_sp[i];
  }
  if (!ok) {
    for (const auto& r : rows) {
      std::printf("  %s: dim R=%zu dim S=%zu dim S'=%zu\n", to_string(r.alpha).c_str(),
                  r.dim_r, r.dim_s, r.dim_s_prime);
    }
  }
  return ok;
}

bool worked_free_algebra_examples() {
  auto w = [](int alphabet, std::vector<int> letters) {
    return word_element(alphabet, Word(std::move(letters)));
  };
  bool ok = true;
  ok = ok && dynkin({2, 6, 7}, 7) == w(7, {2, 6, 7}) - w(7, {6, 2, 7}) -
                                         w(7, {7, 2, 6}) + w(7, {7, 6, 2});
  ok = ok && dynkin({1, 4}, 4) == w(4, {1, 4}) - w(4, {4, 1});
  ok = ok && dynkin({3}, 3) == w(3, {3});
  ok = ok && v_alpha(Composition({2, 1})) == w(3, {1, 2, 3}) - w(3, {2, 1, 3});
  ok = ok && v_alpha(Composition({2, 2})) ==
                 w(4, {1, 2, 3, 4}) - w(4, {2, 1, 3, 4}) - w(4, {1, 2, 4, 3}) +
                     w(4, {2, 1, 4, 3});
  ok = ok && right_action_by_algebra(v_alpha(Composition({2, 2})),
                                     b_element(Composition({3, 1})))
                 .is_zero();
  FreeAlgebraElement v12 = dynkin({1, 2}, 4), v34 = dynkin({3, 4}, 4);
  ok = ok && right_action_by_algebra(v_alpha(Composition({2, 2})),
                                     b_element(Composition({2, 2}))) ==
                 concat_product(v12, v34) + concat_product(v34, v12);
  return ok;
}

bool minima_example_and_inverse_law() {
  Permutation w = parse_permutation("672491853");
  bool ok = lrm(w) == std::vector<int>{1, 2, 6};
  ok = ok && inverse(w) == parse_permutation("639481275");
  ok = ok && lrm(inverse(w)) == std::vector<int>{1, 3, 6};
  for (int n = 0; n <= 6 && ok; ++n) {
    for (const auto& u : all_permutations(n)) {
      std::vector<int> image;
      for (int l : lrm(inverse(u))) image.push_back(u(l));
      std::sort(image.begin(), image.end());
      if (image != lrm(u)) {
        std::printf("  inverse law fails at %s\n", to_string(u).c_str());
        ok = false;
        break;
      }
    }
  }
  return ok;
}

bool random_spectra() {
  std::mt19937 rng(20260817);
  bool ok = true;
  for (int n : {4, 5}) {
    for (int trial = 0; trial < 20 && ok; ++trial) {
      SigmaElement a;
      a.n = n;
      for (const auto& alpha : compositions_of(n)) {
        long c = static_cast<long>(rng() % 19) - 9;
        if (c != 0) a.coeffs[alpha] = Rational(c);
      }
      auto res = left_mult_matrix(a);
      if (!res.triangular || res.diagonal != res.predicted_diagonal) {
        std::printf("  spectrum check fails at n=%d trial %d\n", n, trial);
        ok = false;
      }
    }
    SigmaElement full;
    full.n = n;
    full.coeffs[Composition(std::vector<int>(n, 1))] = Rational(1);
    auto res = left_mult_matrix(full);
    auto evs = eigenvalue_multiset(res);
    Rational nf(static_cast<long>(factorial(n)));
    ok = ok && res.triangular && evs.size() == 2 && evs[0].first == nf &&
         evs[0].second == 1 && evs[1].first == 0 &&
         evs[1].second == factorial(n) - 1;
  }
  return ok;
}

template <typename F>
void timed(int id, const char* what, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = body();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, what, ok, secs);
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = argc > 1 && std::strcmp(argv[1], "--extended") == 0;
  if (extended) {
    timed(7, "span equality per partition class at n = 6", [] {
      Report r = verify_filtration_equality(6);
      if (!r.all_pass()) std::fputs(render_text(r).c_str(), stdout);
      return r.all_pass();
    });
    std::printf("acceptance (extended): %s\n", failures ? "FAIL" : "pass");
    return failures ? 1 : 0;
  }

  timed(1, "n = 3 dimension table", dimension_table);
  timed(2, "worked Dynkin and block-product examples", worked_free_algebra_examples);
  timed(3, "nine-letter minima example and the inverse image law, n <= 6",
        minima_example_and_inverse_law);
  timed(4, "Solomon product expansion vs convolution, n <= 5",
        [] { return suite_passes("mackey", 0, 5); });
  timed(5, "LRM basis unitriangularity, n <= 6",
        [] { return suite_passes("basis", 0, 6); });
  timed(6, "Dynkin-block products against the B action, n <= 5",
        [] { return suite_passes("vb", 0, 5); });
  timed(7, "LRM span equals the right ideal, n <= 5",
        [] { return suite_passes("filtration", 0, 5); });
  timed(8, "block-scalar action modulo finer ideals, n <= 5",
        [] { return suite_passes("scalar-action", 0, 5); });
  timed(9, "triangular spectra: 20 random elements each at n = 4, 5 plus the full sum",
        random_spectra);
  timed(10, "anagram invariance, refinement inclusion, bimodule stability, n <= 5", [] {
    return suite_passes("anagram", 0, 5) && suite_passes("inclusion", 0, 5) &&
           suite_passes("bimodule", 0, 5);
  });
  timed(11, "reordered-product and leading-word coefficient laws, n <= 4", [] {
    return suite_passes("wuv", 0, 4) && suite_passes("wu2", 0, 4);
  });

  std::printf("acceptance: %d of 11 criteria passed\n", 11 - failures);
  return failures ? 1 : 0;
}
