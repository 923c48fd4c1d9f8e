#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace desalg {

struct CaseResult {
  std::string name;
  bool pass = true;
  std::string witness;
};

// Outcome of one verification suite. Cases run in a fixed order and the run
// stops at the first failure, so either every case is present and passing or
// the last case is the (single) failure.
struct Report {
  std::string suite;
  int n = 0;
  std::vector<CaseResult> cases;

  bool all_pass() const;
  size_t pass_count() const;
};

// Worker count for suites, from the DESALG_JOBS environment variable
// (default 1). The reported cases are identical for every worker count.
unsigned worker_count();

// Solomon product: the margin-matrix expansion of B_alpha * B_beta agrees
// with direct convolution for every pair; each read(M) refines beta and its
// partition refines alpha's.
Report verify_mackey(int n);

// The product expansion of v_alpha(beta) acted on by b_element(gamma) for
// every pair: direct action equals vb_rhs; vanishing when beta's partition
// does not refine gamma's; the equal-length case against the permutation-sum
// form.
Report verify_vb(int n);

// For anagram cLRM' pairs (w, u) and every admissible reordering chi of the
// beta-blocks: a word v with vu = w occurring in the reordered Dynkin product
// forces chi = id, v = id and equal shapes.
Report verify_wuv(int n);

// Coefficient of the word of w in v_alpha(beta) acted by B_beta * w is 1
// (beta = cLRM'(w)); for u != w it vanishes unless cLRM'(w)'s partition
// strictly refines cLRM'(u)'s.
Report verify_wu2(int n);

// The LRM basis expands unitriangularly over the permutation basis in lex
// order.
Report verify_basis(int n);

// span_equal(s_alpha, r_alpha) for every composition of n; at n >= 6 one
// representative per partition class (both spans only depend on the class;
// anagram invariance is checked by its own suite).
Report verify_filtration_equality(int n);

// B_alpha acts on generators of the right ideal of B_beta as the scalar
// eta(beta, alpha) modulo the sum of the right ideals of strict refinements
// of beta. Checked on basis rows; the generators depend linearly on them.
Report verify_scalar_action(int n);

// Every r_alpha(beta) is stable under left multiplication by every B_alpha.
Report verify_bimodule(int n);

// r_alpha depends only on the underlying partition.
Report verify_anagram_invariance(int n);

// Partition refinement of beta into gamma forces r_alpha(beta) inside
// r_alpha(gamma); covers composition refinement as a special case.
Report verify_refinement_inclusion(int n);

// Inside the descent algebra, in B-basis coordinates: the right ideal of
// B_beta lies in the right ideal of B_gamma whenever beta's partition
// refines gamma's.
Report verify_sigma_inclusion(int n);

// The suite names cmd_verify accepts, in display order.
const std::vector<std::string>& suite_names();

// Dispatch by suite name; throws std::invalid_argument for unknown names.
Report run_suite(const std::string& name, int n);

// "suite mackey n=3: pass (16 cases)" plus FAIL lines with witnesses.
std::string render_text(const Report& r);

}  // namespace desalg
