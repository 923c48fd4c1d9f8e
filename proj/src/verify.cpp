#include "desalg/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "desalg/compositions.hpp"
#include "desalg/exact_linalg.hpp"
#include "desalg/filtration.hpp"
#include "desalg/free_algebra.hpp"
#include "desalg/group_algebra.hpp"
#include "desalg/permutations.hpp"

namespace desalg {

bool Report::all_pass() const {
  for (const auto& c : cases) {
    if (!c.pass) return false;
  }
  return true;
}

size_t Report::pass_count() const {
  size_t k = 0;
  for (const auto& c : cases) {
    if (c.pass) ++k;
  }
  return k;
}

unsigned worker_count() {
  const char* env = std::getenv("DESALG_JOBS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 256) return 1;
  return static_cast<unsigned>(v);
}

namespace {

using Witness = std::optional<std::string>;

struct CaseSpec {
  std::string name;
  std::function<Witness()> run;
};

Witness run_guarded(const CaseSpec& spec) {
  try {
    return spec.run();
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

// Executes cases in order and stops at the first failure. With workers the
// indices are claimed in order, so once a failure is recorded every lower
// index has been claimed and will finish; truncating at the first failing
// index then reproduces the sequential report exactly.
Report run_cases(std::string suite, int n, std::vector<CaseSpec> specs) {
  Report rep{std::move(suite), n, {}};
  const size_t jobs = std::min<size_t>(worker_count(), specs.size());
  if (jobs <= 1) {
    for (const auto& spec : specs) {
      Witness w = run_guarded(spec);
      rep.cases.push_back(CaseResult{spec.name, !w.has_value(), w.value_or("")});
      if (w) break;
    }
    return rep;
  }
  std::vector<std::optional<Witness>> results(specs.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  auto work = [&]() {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= specs.size()) return;
      results[i] = run_guarded(specs[i]);
      if (results[i]->has_value()) failed.store(true, std::memory_order_relaxed);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (size_t t = 0; t < jobs; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  for (size_t i = 0; i < specs.size() && results[i].has_value(); ++i) {
    bool fail = results[i]->has_value();
    rep.cases.push_back(CaseResult{specs[i].name, !fail, fail ? **results[i] : std::string()});
    if (fail) break;
  }
  return rep;
}

std::string pair_name(const char* an, const Composition& a, const char* bn,
                      const Composition& b) {
  return std::string(an) + "=" + to_string(a) + " " + bn + "=" + to_string(b);
}

Witness fail(std::string msg) { return Witness(std::move(msg)); }

Rational to_rational(long long k) { return Rational(static_cast<long>(k)); }

FreeAlgebraElement block_dynkin_product(const Composition& beta, const Permutation& chi,
                                        int n) {
  auto bblocks = blocks(beta);
  FreeAlgebraElement prod = word_element(n, Word());
  for (int i = 1; i <= chi.size(); ++i) {
    auto [lo, hi] = bblocks[chi(i) - 1];
    std::vector<int> s(hi - lo + 1);
    for (int k = 0; k <= hi - lo; ++k) s[k] = lo + k;
    prod = concat_product(prod, dynkin(s, n));
  }
  return prod;
}

// Coefficient of the word of w in e acted on the right by a. The place
// action sends the word of v to the word of v*sigma, so the w-coefficient
// of e*sigma is the coefficient of w*sigma^{-1} in e.
Rational coefficient_after_action(const FreeAlgebraElement& e, const GroupAlgebraElement& a,
                                  const Permutation& w) {
  Rational c(0);
  for (const auto& [sigma, cs] : a.terms()) {
    c += cs * e.coefficient(Word(compose(w, inverse(sigma)).one_line()));
  }
  return c;
}

// Shared per-suite tables over all compositions of n.
struct RTable {
  int n = 0;
  std::vector<Composition> comps;
  std::vector<Partition> parts;
  std::vector<GroupAlgebraElement> b;  // b_element per composition
  std::vector<SubspaceBasis> r;        // r_alpha per composition
  std::vector<SubspaceBasis> f;        // per beta: sum of r over strict refiners
};

std::shared_ptr<const RTable> build_r_table(int n, bool with_b, bool with_f) {
  auto st = std::make_shared<RTable>();
  st->n = n;
  st->comps = compositions_of(n);
  for (const auto& c : st->comps) {
    st->parts.push_back(underlying_partition(c));
    if (with_b) st->b.push_back(b_element(c));
    st->r.push_back(r_alpha(c));
  }
  if (with_f) {
    for (size_t bi = 0; bi < st->comps.size(); ++bi) {
      SubspaceBasis acc = SubspaceBasis::zero(factorial(n));
      for (size_t ai = 0; ai < st->comps.size(); ++ai) {
        if (ai != bi && refines(st->comps[ai], st->comps[bi])) {
          acc = subspace_sum(acc, st->r[ai]);
        }
      }
      st->f.push_back(std::move(acc));
    }
  }
  return st;
}

}  // namespace

Report verify_mackey(int n) {
  auto comps = compositions_of(n);
  auto bmap = std::make_shared<std::map<Composition, GroupAlgebraElement>>();
  for (const auto& c : comps) bmap->emplace(c, b_element(c));
  std::shared_ptr<const std::map<Composition, GroupAlgebraElement>> shared = bmap;
  std::vector<CaseSpec> specs;
  for (const auto& alpha : comps) {
    for (const auto& beta : comps) {
      specs.push_back({pair_name("alpha", alpha, "beta", beta),
                       [alpha, beta, n, shared]() -> Witness {
        Partition alpha_part = underlying_partition(alpha);
        for (const MarginMatrix& m : matrices_with_margins(alpha, beta)) {
          Composition r = read(m);
          if (!refines(r, beta)) {
            return fail("read " + to_string(r) + " does not refine beta");
          }
          if (!partition_refines(underlying_partition(r), alpha_part)) {
            return fail("read " + to_string(r) + " has partition not refining alpha's");
          }
        }
        auto mult = b_product_mackey(alpha, beta);
        GroupAlgebraElement rhs(n);
        for (const auto& [g, k] : mult) {
          rhs = add(rhs, scale(to_rational(k), shared->at(g)));
        }
        GroupAlgebraElement lhs = convolve(shared->at(alpha), shared->at(beta));
        if (!(lhs == rhs)) {
          return fail("convolution " + to_string(lhs) + " but margin expansion " +
                      to_string(rhs));
        }
        long long diag = 0;
        if (auto it = mult.find(beta); it != mult.end()) diag = it->second;
        if (diag != eta(beta, alpha)) {
          return fail("multiplicity of beta is " + std::to_string(diag) +
                      ", eta gives " + std::to_string(eta(beta, alpha)));
        }
        return std::nullopt;
      }});
    }
  }
  return run_cases("mackey", n, std::move(specs));
}

Report verify_vb(int n) {
  auto comps = compositions_of(n);
  std::vector<CaseSpec> specs;
  for (const auto& beta : comps) {
    for (const auto& gamma : comps) {
      specs.push_back({pair_name("beta", beta, "gamma", gamma),
                       [beta, gamma, n]() -> Witness {
        FreeAlgebraElement lhs = right_action_by_algebra(v_alpha(beta), b_element(gamma));
        FreeAlgebraElement rhs = vb_rhs(beta, gamma);
        if (!(lhs == rhs)) {
          return fail("direct action " + to_string(lhs) + " but expansion " +
                      to_string(rhs));
        }
        if (!partition_refines(underlying_partition(beta), underlying_partition(gamma)) &&
            !lhs.is_zero()) {
          return fail("product should vanish but is " + to_string(lhs));
        }
        if (beta.length() == gamma.length()) {
          // Independent equal-length form: one Dynkin product per reordering
          // chi of beta's blocks aligning the part sizes with gamma.
          FreeAlgebraElement alt(n);
          for (const Permutation& chi : all_permutations(beta.length())) {
            bool admissible = true;
            for (int i = 1; i <= chi.size(); ++i) {
              if (beta.parts()[chi(i) - 1] != gamma.parts()[i - 1]) {
                admissible = false;
                break;
              }
            }
            if (admissible) alt = add(alt, block_dynkin_product(beta, chi, n));
          }
          if (!(alt == rhs)) {
            return fail("equal-length form " + to_string(alt) + " but expansion " +
                        to_string(rhs));
          }
        }
        return std::nullopt;
      }});
    }
  }
  return run_cases("vb", n, std::move(specs));
}

Report verify_wuv(int n) {
  struct State {
    std::vector<Permutation> perms;
    std::vector<Composition> shape;
    std::vector<Partition> part;
  };
  auto st = std::make_shared<State>();
  st->perms = all_permutations(n);
  for (const auto& w : st->perms) {
    st->shape.push_back(clrm_prime(w));
    st->part.push_back(underlying_partition(st->shape.back()));
  }
  std::shared_ptr<const State> shared = st;
  std::vector<CaseSpec> specs;
  for (size_t iw = 0; iw < st->perms.size(); ++iw) {
    for (size_t iu = 0; iu < st->perms.size(); ++iu) {
      if (st->part[iw] != st->part[iu]) continue;
      specs.push_back({"w=" + to_string(st->perms[iw]) + " u=" + to_string(st->perms[iu]),
                       [iw, iu, n, shared]() -> Witness {
        const Permutation& w = shared->perms[iw];
        const Permutation& u = shared->perms[iu];
        const Composition& beta = shared->shape[iw];
        const Composition& gamma = shared->shape[iu];
        const Permutation id = identity_permutation(n);
        for (const Permutation& chi : all_permutations(beta.length())) {
          bool admissible = true;
          for (int i = 1; i <= chi.size(); ++i) {
            if (beta.parts()[chi(i) - 1] != gamma.parts()[i - 1]) {
              admissible = false;
              break;
            }
          }
          if (!admissible) continue;
          FreeAlgebraElement prod = block_dynkin_product(beta, chi, n);
          for (const auto& [word, c] : prod.terms()) {
            auto v = as_permutation(word);
            if (!v) return fail("non-permutation word " + to_string(word));
            if (!(compose(*v, u) == w)) continue;
            if (!(chi == identity_permutation(chi.size())) || !(*v == id) ||
                !(gamma == beta)) {
              return fail("chi=" + to_string(chi) + " v=" + to_string(*v) +
                          " solves vu=w but should be the identity case");
            }
          }
        }
        return std::nullopt;
      }});
    }
  }
  return run_cases("wuv", n, std::move(specs));
}

Report verify_wu2(int n) {
  struct State {
    std::vector<Permutation> perms;
    std::vector<Composition> shape;
    std::vector<Partition> part;
    std::map<Composition, FreeAlgebraElement> v;
    std::map<Composition, GroupAlgebraElement> b;
  };
  auto st = std::make_shared<State>();
  st->perms = all_permutations(n);
  for (const auto& w : st->perms) {
    Composition shape = clrm_prime(w);
    st->shape.push_back(shape);
    st->part.push_back(underlying_partition(shape));
    if (!st->v.count(shape)) {
      st->v.emplace(shape, v_alpha(shape));
      st->b.emplace(shape, b_element(shape));
    }
  }
  std::shared_ptr<const State> shared = st;
  std::vector<CaseSpec> specs;
  for (size_t iw = 0; iw < st->perms.size(); ++iw) {
    specs.push_back({"a w=" + to_string(st->perms[iw]), [iw, shared]() -> Witness {
      const Permutation& w = shared->perms[iw];
      const Composition& beta = shared->shape[iw];
      GroupAlgebraElement a = convolve(shared->b.at(beta), delta(w));
      Rational c = coefficient_after_action(shared->v.at(beta), a, w);
      if (c != 1) {
        return fail("coefficient of the word of w is " + to_string(c) + ", expected 1");
      }
      return std::nullopt;
    }});
  }
  for (size_t iw = 0; iw < st->perms.size(); ++iw) {
    for (size_t iu = 0; iu < st->perms.size(); ++iu) {
      if (iu == iw) continue;
      // No claim when the shape of w strictly refines the shape of u.
      if (st->part[iw] != st->part[iu] &&
          partition_refines(st->part[iw], st->part[iu])) {
        continue;
      }
      specs.push_back({"b w=" + to_string(st->perms[iw]) + " u=" + to_string(st->perms[iu]),
                       [iw, iu, shared]() -> Witness {
        const Permutation& w = shared->perms[iw];
        const Permutation& u = shared->perms[iu];
        const Composition& beta = shared->shape[iw];
        const Composition& gamma = shared->shape[iu];
        GroupAlgebraElement a = convolve(shared->b.at(gamma), delta(u));
        Rational c = coefficient_after_action(shared->v.at(beta), a, w);
        if (c != 0) {
          return fail("coefficient of the word of w is " + to_string(c) + ", expected 0");
        }
        return std::nullopt;
      }});
    }
  }
  return run_cases("wu2", n, std::move(specs));
}

Report verify_basis(int n) {
  std::vector<CaseSpec> specs;
  specs.push_back({"unitriangular certificate", [n]() -> Witness {
    auto basis = lrm_basis(n);
    std::vector<std::vector<Rational>> cols;
    cols.reserve(basis.size());
    for (const auto& e : basis) cols.push_back(dense_coefficients(e.value));
    if (unitriangular_certificate(cols)) return std::nullopt;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j][j] != 1) {
        return fail("coefficient of " + to_string(basis[j].w) +
                    " in its own basis element is " + to_string(cols[j][j]));
      }
      for (size_t i = j + 1; i < cols.size(); ++i) {
        if (cols[j][i] != 0) {
          return fail("basis element of " + to_string(basis[j].w) +
                      " has lex-greater term " + to_string(from_lex_rank(n, i)));
        }
      }
    }
    return fail("certificate failed");
  }});
  return run_cases("basis", n, std::move(specs));
}

Report verify_filtration_equality(int n) {
  auto basis = std::make_shared<const std::vector<LrmBasisElement>>(lrm_basis(n));
  auto check = [basis](const Composition& alpha) -> Witness {
    SubspaceBasis s = s_alpha(alpha, *basis);
    SubspaceBasis r = r_alpha(alpha);
    if (span_equal(s, r)) return std::nullopt;
    return fail("dim S = " + std::to_string(s.rank()) + ", dim R = " +
                std::to_string(r.rank()) + ", spans differ");
  };
  std::vector<CaseSpec> specs;
  if (n < 6) {
    for (const Composition& alpha : compositions_of(n)) {
      specs.push_back({"alpha=" + to_string(alpha),
                       [alpha, check]() { return check(alpha); }});
    }
  } else {
    // Both spans depend only on the underlying partition (anagram suite), so
    // one representative per class keeps the 720-dimensional rrefs counted.
    for (const Partition& lam : partitions_of(n)) {
      Composition alpha = partition_as_composition(lam);
      specs.push_back({"class=" + to_string(lam),
                       [alpha, check]() { return check(alpha); }});
    }
  }
  return run_cases("filtration", n, std::move(specs));
}

Report verify_scalar_action(int n) {
  auto st = build_r_table(n, true, true);
  std::vector<CaseSpec> specs;
  for (size_t ai = 0; ai < st->comps.size(); ++ai) {
    for (size_t bi = 0; bi < st->comps.size(); ++bi) {
      specs.push_back({pair_name("alpha", st->comps[ai], "beta", st->comps[bi]),
                       [ai, bi, n, st]() -> Witness {
        Rational e = to_rational(eta(st->comps[bi], st->comps[ai]));
        // The generators B_beta * delta_w span exactly this row space and the
        // residual map is linear, so checking the rows checks every w.
        for (const auto& row : st->r[bi].rows) {
          GroupAlgebraElement x = element_from_dense(n, row);
          GroupAlgebraElement y = subtract(convolve(st->b[ai], x), scale(e, x));
          if (!span_contains(st->f[bi], dense_coefficients(y))) {
            return fail("residual " + to_string(y) + " of generator " + to_string(x) +
                        " is not in the strictly-finer sum");
          }
        }
        return std::nullopt;
      }});
    }
  }
  return run_cases("scalar-action", n, std::move(specs));
}

Report verify_bimodule(int n) {
  auto st = build_r_table(n, true, false);
  std::vector<CaseSpec> specs;
  for (size_t ai = 0; ai < st->comps.size(); ++ai) {
    for (size_t bi = 0; bi < st->comps.size(); ++bi) {
      specs.push_back({pair_name("alpha", st->comps[ai], "beta", st->comps[bi]),
                       [ai, bi, n, st]() -> Witness {
        for (const auto& row : st->r[bi].rows) {
          GroupAlgebraElement y = convolve(st->b[ai], element_from_dense(n, row));
          if (!span_contains(st->r[bi], dense_coefficients(y))) {
            return fail("left multiple " + to_string(y) + " left the right ideal");
          }
        }
        return std::nullopt;
      }});
    }
  }
  return run_cases("bimodule", n, std::move(specs));
}

Report verify_anagram_invariance(int n) {
  auto st = build_r_table(n, false, false);
  std::vector<CaseSpec> specs;
  for (size_t i = 0; i < st->comps.size(); ++i) {
    for (size_t j = i; j < st->comps.size(); ++j) {
      if (st->parts[i] != st->parts[j]) continue;
      specs.push_back({pair_name("alpha", st->comps[i], "beta", st->comps[j]),
                       [i, j, st]() -> Witness {
        if (span_equal(st->r[i], st->r[j])) return std::nullopt;
        return fail("dims " + std::to_string(st->r[i].rank()) + " and " +
                    std::to_string(st->r[j].rank()) + ", spans differ");
      }});
    }
  }
  return run_cases("anagram", n, std::move(specs));
}

Report verify_refinement_inclusion(int n) {
  auto st = build_r_table(n, false, false);
  std::vector<CaseSpec> specs;
  for (size_t bi = 0; bi < st->comps.size(); ++bi) {
    for (size_t gi = 0; gi < st->comps.size(); ++gi) {
      if (!partition_refines(st->parts[bi], st->parts[gi])) continue;
      specs.push_back({pair_name("beta", st->comps[bi], "gamma", st->comps[gi]),
                       [bi, gi, n, st]() -> Witness {
        for (const auto& row : st->r[bi].rows) {
          if (!span_contains(st->r[gi], row)) {
            return fail("row " + to_string(element_from_dense(n, row)) +
                        " is not in the coarser ideal");
          }
        }
        return std::nullopt;
      }});
    }
  }
  return run_cases("inclusion", n, std::move(specs));
}

Report verify_sigma_inclusion(int n) {
  struct State {
    std::vector<Composition> comps;
    std::vector<Partition> parts;
    std::vector<std::vector<std::vector<Rational>>> rows;  // per gamma, per delta
    std::vector<SubspaceBasis> ideal;
  };
  auto st = std::make_shared<State>();
  st->comps = compositions_of(n);
  std::map<Composition, size_t> index;
  for (size_t i = 0; i < st->comps.size(); ++i) index[st->comps[i]] = i;
  const size_t dim = st->comps.size();
  for (const auto& gamma : st->comps) {
    st->parts.push_back(underlying_partition(gamma));
    std::vector<std::vector<Rational>> rows;
    for (const auto& delta : st->comps) {
      std::vector<Rational> row(dim, Rational(0));
      for (const auto& [g, k] : b_product_mackey(gamma, delta)) {
        row[index.at(g)] = to_rational(k);
      }
      rows.push_back(std::move(row));
    }
    st->ideal.push_back(rref(RationalMatrix::from_rows(rows, dim)));
    st->rows.push_back(std::move(rows));
  }
  std::shared_ptr<const State> shared = st;
  std::vector<CaseSpec> specs;
  for (size_t bi = 0; bi < dim; ++bi) {
    for (size_t gi = 0; gi < dim; ++gi) {
      if (!partition_refines(shared->parts[bi], shared->parts[gi])) continue;
      specs.push_back({pair_name("beta", shared->comps[bi], "gamma", shared->comps[gi]),
                       [bi, gi, shared]() -> Witness {
        for (size_t di = 0; di < shared->rows[bi].size(); ++di) {
          if (!span_contains(shared->ideal[gi], shared->rows[bi][di])) {
            return fail("B_beta * B_" + to_string(shared->comps[di]) +
                        " is not in the coarser ideal of the descent algebra");
          }
        }
        return std::nullopt;
      }});
    }
  }
  return run_cases("sigma-inclusion", n, std::move(specs));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "mackey", "vb",       "wuv",     "wu2",       "basis",     "filtration",
      "scalar-action", "bimodule", "anagram", "inclusion", "sigma-inclusion"};
  return names;
}

Report run_suite(const std::string& name, int n) {
  if (name == "mackey") return verify_mackey(n);
  if (name == "vb") return verify_vb(n);
  if (name == "wuv") return verify_wuv(n);
  if (name == "wu2") return verify_wu2(n);
  if (name == "basis") return verify_basis(n);
  if (name == "filtration") return verify_filtration_equality(n);
  if (name == "scalar-action") return verify_scalar_action(n);
  if (name == "bimodule") return verify_bimodule(n);
  if (name == "anagram") return verify_anagram_invariance(n);
  if (name == "inclusion") return verify_refinement_inclusion(n);
  if (name == "sigma-inclusion") return verify_sigma_inclusion(n);
  throw std::invalid_argument("unknown suite: " + name);
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " n=" << r.n << ": ";
  if (r.all_pass()) {
    os << "pass (" << r.cases.size() << " cases)\n";
  } else {
    os << "FAIL\n";
    for (const auto& c : r.cases) {
      if (!c.pass) os << "  " << c.name << ": " << c.witness << "\n";
    }
  }
  return os.str();
}

}  // namespace desalg
