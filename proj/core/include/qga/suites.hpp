#pragma once

#include <string>
#include <vector>

namespace qga {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

// the groups every suite draws from, as family spec strings
const std::vector<std::string>& builtin_corpus();

// every abelian group of order <= max_order, as cyclic factor lists
std::vector<std::vector<long>> abelian_factor_lists(long max_order);

// --- individual checks (composed into suites and the acceptance run) ---

// closed-form decomposition equals the character-table decomposition
CheckResult formula_oracle_check(const std::string& spec);

// pinned decompositions for the extraspecial groups of order 27 and 125
std::vector<CheckResult> pinned_decomposition_checks();

// Perlis-Walker path vs oracle for every abelian group of one order
CheckResult perlis_walker_check(long order);

// squaring-map quaternion count: pinned values for the four standard
// 2-groups, and agreement with indicator counts on every built-in 2-group
std::vector<CheckResult> quaternion_count_checks();

// exponent-p vs exponent-p^2 extraspecial pairs: equal at odd p, and the
// order-8 pair reported as genuinely different
std::vector<CheckResult> isoclinic_pair_checks();

// exact orthogonality relations and degree sum for one group's table
CheckResult orthogonality_check(const std::string& spec);

// complete idempotent set: axioms, closed-form matches, component dimensions
CheckResult idempotent_check(const std::string& spec, int threads = 1);

// pinned component dimensions: 4 at quaternion order 8, 18 at order 27
std::vector<CheckResult> pinned_dimension_checks();

// per-element equivalence of the coset-in-class condition with character
// vanishing, over every proper nontrivial normal subgroup
CheckResult vanishing_equivalence_check(const std::string& spec);

// every Galois class has phi(conductor) members
CheckResult orbit_size_check(const std::string& spec);

// when (G, Z(G)) is a Camina pair: nonlinear character structure, kernels
// determining Galois classes, and conductor counts against cyclic subgroup
// counts of the center.  Empty when the pair is not Camina.
std::vector<CheckResult> central_pair_checks(const std::string& spec);

// exact dimension identity for the class-3 closed form over a parameter grid
std::vector<CheckResult> class3_identity_checks();

// structural checks, formula-oracle equality, and the idempotent dichotomy
// for an ingested class-3 group file
std::vector<CheckResult> class3_file_checks(const std::string& path, int threads = 1);

// --- suites exposed by the command line ---

SuiteReport run_core_suite(int threads = 1);
SuiteReport run_idempotents_suite(int threads = 1);
SuiteReport run_lemmas_suite(int threads = 1);
SuiteReport run_class3_suite(const std::string& group_file = "", int threads = 1);

std::string suite_report_json(const SuiteReport& r);
std::string suite_report_pretty(const SuiteReport& r);

} // namespace qga
