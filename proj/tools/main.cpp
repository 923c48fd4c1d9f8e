// desalg: computations in the descent algebra of the symmetric group.
//
// Subcommands expose the B-basis (expansion and Solomon product), the
// left-to-right-minima statistics, the dimension table of the right-ideal
// filtration, the spectrum of left multiplication by a descent algebra
// element, and the verification suites. Output is text or JSON; exit code 0
// on success, 1 when a verification-style check fails, 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "desalg/compositions.hpp"
#include "desalg/filtration.hpp"
#include "desalg/group_algebra.hpp"
#include "desalg/json_io.hpp"
#include "desalg/permutations.hpp"
#include "desalg/rational.hpp"
#include "desalg/verify.hpp"

namespace {

using namespace desalg;

// Dense commands hold tables quadratic in n!, so they stop at n = 5 unless
// --extended lifts the bound to 6. Commands linear in n! go up to 7.
void check_table_guard(int n, bool extended) {
  int limit = extended ? 6 : 5;
  if (n < 0 || n > limit) {
    throw std::runtime_error("n must be between 0 and " + std::to_string(limit) +
                             (extended ? "" : " (use --extended for n = 6)"));
  }
}

Composition parse_composition_of(const std::string& text, int n) {
  Composition alpha = parse_composition(text);
  if (alpha.weight() != n) {
    throw std::runtime_error("composition " + to_string(alpha) +
                             " does not sum to n = " + std::to_string(n));
  }
  return alpha;
}

std::string bare(const std::string& parenthesized) {
  return parenthesized.substr(1, parenthesized.size() - 2);
}

std::string joined(const std::vector<int>& v, char open, char close) {
  std::string s(1, open);
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  s += close;
  return s;
}

int cmd_bexpand(int n, const std::string& alpha_text, const std::string& format) {
  if (n < 0 || n > 7) throw std::runtime_error("bexpand supports n <= 7");
  Composition alpha = parse_composition_of(alpha_text, n);
  GroupAlgebraElement b = b_element(alpha);
  if (format == "json") {
    std::cout << group_element_to_json(b).dump(2) << "\n";
  } else {
    for (const auto& [w, c] : b.terms()) std::cout << to_string(w) << "\n";
  }
  return 0;
}

int cmd_bprod(int n, const std::string& alpha_text, const std::string& beta_text,
              const std::string& format, bool extended) {
  check_table_guard(n, extended);
  Composition alpha = parse_composition_of(alpha_text, n);
  Composition beta = parse_composition_of(beta_text, n);
  auto mult = b_product_mackey(alpha, beta);
  GroupAlgebraElement prod = convolve(b_element(alpha), b_element(beta));
  if (format == "json") {
    nlohmann::json multiset = nlohmann::json::array();
    for (const auto& [gamma, k] : mult) {
      multiset.push_back({{"gamma", bare(to_string(gamma))}, {"count", k}});
    }
    nlohmann::json out = {{"multiset", std::move(multiset)},
                          {"product", group_element_to_json(prod)}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [gamma, k] : mult) {
      std::cout << to_string(gamma) << " ×" << k << "\n";
    }
    std::cout << "product = " << to_string(prod) << "\n";
  }
  return 0;
}

int cmd_lrm(const std::string& w_text, const std::string& format) {
  Permutation w = parse_permutation(w_text);
  std::vector<int> seq = lrm_sequence(w);  // reading order, decreasing values
  std::vector<int> lp = lrm_prime(w);
  Composition shape = clrm_prime(w);
  if (format == "json") {
    nlohmann::json out = {{"lrm", seq},
                          {"lrm_prime", lp},
                          {"clrm_prime", bare(to_string(shape))},
                          {"sequence", seq}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "LRM: " << joined(seq, '{', '}') << "\n";
    std::cout << "LRM': " << to_string_subset(lp) << "\n";
    std::cout << "cLRM': " << to_string(shape) << "\n";
    std::cout << "lrm sequence: " << joined(seq, '(', ')') << "\n";
  }
  return 0;
}

int cmd_dims(int n, const std::string& format, bool extended) {
  check_table_guard(n, extended);
  std::vector<DimsRow> rows = dims_table(n);
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
      out.push_back({{"alpha", bare(to_string(r.alpha))},
                     {"partition", bare(to_string(r.partition))},
                     {"dim_r", r.dim_r},
                     {"dim_s", r.dim_s},
                     {"dim_s_prime", r.dim_s_prime}});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> table;
  table.push_back({"alpha", "partition", "dim R", "dim S", "dim S'"});
  for (const auto& r : rows) {
    table.push_back({to_string(r.alpha), to_string(r.partition),
                     std::to_string(r.dim_r), std::to_string(r.dim_s),
                     std::to_string(r.dim_s_prime)});
  }
  std::vector<size_t> width(table[0].size(), 0);
  for (const auto& row : table) {
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : table) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
  return 0;
}

int cmd_eigen(int n, const std::string& file, const std::string& format, bool extended) {
  check_table_guard(n, extended);
  nlohmann::json j;
  if (file == "-") {
    j = nlohmann::json::parse(std::cin);
  } else {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    j = nlohmann::json::parse(in);
  }
  SigmaElement a = sigma_from_json(j, n);
  LeftMultResult res = left_mult_matrix(a);
  bool diag_ok = res.diagonal == res.predicted_diagonal;
  auto evs = eigenvalue_multiset(res);
  if (format == "json") {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& [v, m] : evs) {
      nlohmann::json entry = rational_to_json(v);
      entry["multiplicity"] = m;
      values.push_back(std::move(entry));
    }
    nlohmann::json out = {{"triangular", res.triangular},
                          {"diagonal_matches_prediction", diag_ok},
                          {"eigenvalues", std::move(values)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "triangular: " << (res.triangular ? "yes" : "no") << "\n";
    std::cout << "diagonal matches prediction: " << (diag_ok ? "yes" : "no") << "\n";
    std::cout << "eigenvalues:\n";
    for (const auto& [v, m] : evs) {
      std::cout << "  " << to_string(v) << " ×" << m << "\n";
    }
  }
  return (res.triangular && diag_ok) ? 0 : 1;
}

int cmd_verify(int n, const std::string& suite, const std::string& format, bool extended,
               int jobs) {
  check_table_guard(n, extended);
  if (jobs > 0) setenv("DESALG_JOBS", std::to_string(jobs).c_str(), 1);
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }
  bool ok = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& name : names) {
    Report r = run_suite(name, n);  // unknown suite throws, exits 2
    ok = ok && r.all_pass();
    if (format == "json") {
      out.push_back(report_to_json(r));
    } else {
      std::cout << render_text(r) << std::flush;
    }
  }
  if (format == "json") std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"descent algebra of the symmetric group: B-basis computations, "
               "left-to-right-minima statistics, right-ideal filtration "
               "dimensions, spectra, and verification suites"};
  app.require_subcommand(1);
  int rc = 0;

  int n = 0;
  std::string alpha, beta, w_text, file, suite;
  std::string format = "text";
  bool extended = false;
  int jobs = 0;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* bexpand = app.add_subcommand("bexpand", "print B_alpha term by term");
  bexpand->add_option("--n", n, "symmetric group size")->required();
  bexpand->add_option("--alpha", alpha, "composition of n, e.g. 3,1")->required();
  add_common(bexpand);
  bexpand->callback([&]() { rc = cmd_bexpand(n, alpha, format); });

  CLI::App* bprod = app.add_subcommand(
      "bprod", "Solomon product B_alpha * B_beta: multiset of compositions and expansion");
  bprod->add_option("--n", n, "symmetric group size")->required();
  bprod->add_option("--alpha", alpha, "left factor composition")->required();
  bprod->add_option("--beta", beta, "right factor composition")->required();
  bprod->add_flag("--extended", extended, "allow n = 6");
  add_common(bprod);
  bprod->callback([&]() { rc = cmd_bprod(n, alpha, beta, format, extended); });

  CLI::App* lrmc = app.add_subcommand(
      "lrm", "left-to-right minima of a permutation: LRM, LRM', cLRM', sequence");
  lrmc->add_option("w", w_text, "permutation in one-line notation")->required();
  add_common(lrmc);
  lrmc->callback([&]() { rc = cmd_lrm(w_text, format); });

  CLI::App* dims = app.add_subcommand(
      "dims", "dimension table of the right ideals and their LRM spans");
  dims->add_option("--n", n, "symmetric group size")->required();
  dims->add_flag("--extended", extended, "allow n = 6");
  add_common(dims);
  dims->callback([&]() { rc = cmd_dims(n, format, extended); });

  CLI::App* eigen = app.add_subcommand(
      "eigen", "spectrum of left multiplication by a descent algebra element");
  eigen->add_option("--n", n, "symmetric group size")->required();
  eigen->add_option("--file", file, "JSON list of {alpha, num, den}; - for stdin")
      ->required();
  eigen->add_flag("--extended", extended, "allow n = 6");
  add_common(eigen);
  eigen->callback([&]() { rc = cmd_eigen(n, file, format, extended); });

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--n", n, "symmetric group size")->required();
  verify
      ->add_option("--suite", suite,
                   "mackey | vb | wuv | wu2 | basis | filtration | scalar-action | "
                   "bimodule | anagram | inclusion | sigma-inclusion | all")
      ->required();
  verify->add_flag("--extended", extended, "allow n = 6");
  verify->add_option("--jobs", jobs, "worker count (overrides DESALG_JOBS)")
      ->check(CLI::PositiveNumber);
  add_common(verify);
  verify->callback([&]() { rc = cmd_verify(n, suite, format, extended, jobs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
