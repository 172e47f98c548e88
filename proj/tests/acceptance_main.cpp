// Acceptance run: nine criteria, one line each, exit 0 only if all pass.
// An optional argument (or QGA_CLASS3_FILE) names a class-3 group file for
// the ingestion half of criterion 7; without it the identity grid stands in.

#include "qga/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  int number;
  std::string description;
  std::vector<qga::CheckResult> checks;
  double elapsed = 0.0;
  double budget = 0.0;  // 0 = no stated budget
  bool budget_ok = true;

  bool pass() const {
    if (!budget_ok) return false;
    return std::all_of(checks.begin(), checks.end(),
                       [](const qga::CheckResult& c) { return c.pass; });
  }
};

void report(const Criterion& c) {
  std::ostringstream line;
  line << "criterion " << c.number << ": " << (c.pass() ? "PASS" : "FAIL") << " - "
       << c.description << " (" << c.checks.size() << " checks, ";
  line.setf(std::ios::fixed);
  line.precision(2);
  line << c.elapsed << " s)";
  std::cout << line.str() << "\n";
  if (!c.budget_ok)
    std::cout << "    time budget exceeded: " << c.elapsed << " s > " << c.budget << " s\n";
  for (const qga::CheckResult& chk : c.checks)
    if (!chk.pass) std::cout << "    FAIL " << chk.name << ": " << chk.detail << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string class3_file;
  if (argc > 1) class3_file = argv[1];
  else if (const char* env = std::getenv("QGA_CLASS3_FILE")) class3_file = env;

  int threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, 4);

  std::vector<Criterion> criteria;

  {
    // order <= 32 within a second each, the bigger ones within a minute
    const std::vector<std::pair<std::string, double>> benchmarks = {
        {"extraspecial:p=2,n=1,type=+", 1.0},  {"extraspecial:p=2,n=1,type=-", 1.0},
        {"extraspecial:p=2,n=2,type=+", 1.0},  {"extraspecial:p=2,n=2,type=-", 1.0},
        {"extraspecial:p=3,n=1,exp=p", 1.0},   {"extraspecial:p=3,n=1,exp=p2", 1.0},
        {"extraspecial:p=5,n=1,exp=p", 60.0},  {"extraspecial:p=5,n=1,exp=p2", 60.0},
        {"extraspecial:p=3,n=2,exp=p", 60.0},
    };
    Criterion c{1,
                "class-2 closed form equals the character-table oracle on the nine "
                "extraspecial benchmark groups",
                {}};
    auto start = Clock::now();
    for (const auto& [spec, budget] : benchmarks) {
      auto t0 = Clock::now();
      qga::CheckResult r = qga::formula_oracle_check(spec);
      double dt = seconds_since(t0);
      if (dt > budget) {
        c.budget_ok = false;
        c.budget = budget;
      }
      c.checks.push_back(std::move(r));
    }
    c.elapsed = seconds_since(start);
    criteria.push_back(std::move(c));
  }

  {
    Criterion c{2, "pinned decompositions at orders 27 and 125", {}};
    auto start = Clock::now();
    c.checks = qga::pinned_decomposition_checks();
    c.elapsed = seconds_since(start);
    criteria.push_back(std::move(c));
  }

  {
    Criterion c{3, "abelian closed form equals the oracle for every abelian group of order <= 32",
                {}};
    c.budget = 10.0;
    auto start = Clock::now();
    for (long n = 1; n <= 32; ++n) c.checks.push_back(qga::perlis_walker_check(n));
    c.elapsed = seconds_since(start);
    c.budget_ok = c.elapsed < c.budget;
    criteria.push_back(std::move(c));
  }

  {
    Criterion c{4,
                "quaternion component counts: pinned values, and squaring-map count equals "
                "indicator count on every built-in 2-group",
                {}};
    auto start = Clock::now();
    c.checks = qga::quaternion_count_checks();
    c.elapsed = seconds_since(start);
    criteria.push_back(std::move(c));
  }

  {
    Criterion c{5,
                "exponent-p and exponent-p^2 decompositions agree at odd p (orders 27, 125, "
                "243); the order-8 pair differs and is reported",
                {}};
    auto start = Clock::now();
    c.checks = qga::isoclinic_pair_checks();
    c.elapsed = seconds_since(start);
    criteria.push_back(std::move(c));
  }

  {
    Criterion c{6,
                "complete idempotent sets: central, pairwise orthogonal, summing to one, "
                "closed-form and dimension matches (corpus up to order 128)",
                {}};
    c.budget = 120.0;
    auto start = Clock::now();
    c.checks = qga::run_idempotents_suite(threads).checks;
    c.elapsed = seconds_since(start);
    c.budget_ok = c.elapsed < c.budget;
    criteria.push_back(std::move(c));
  }

  {
    Criterion c{7, "class-3 dimension identity over p in {3,5,7}, n in {2,4}, z in {1,2}", {}};
    auto start = Clock::now();
    c.checks = qga::class3_identity_checks();
    if (!class3_file.empty()) {
      c.description += "; structural, decomposition, and idempotent checks on " + class3_file;
      c.budget = 900.0;
      for (qga::CheckResult& r : qga::class3_file_checks(class3_file, threads))
        c.checks.push_back(std::move(r));
      c.elapsed = seconds_since(start);
      c.budget_ok = c.elapsed < c.budget;
    } else {
      c.description += " (no class-3 group file supplied; the identity grid stands in)";
      c.elapsed = seconds_since(start);
    }
    criteria.push_back(std::move(c));
  }

  {
    Criterion c{8,
                "lemma cross-checks: vanishing equivalence on normal subgroups, Galois orbit "
                "sizes, central Camina pair structure",
                {}};
    c.budget = 120.0;
    auto start = Clock::now();
    c.checks = qga::run_lemmas_suite(threads).checks;
    c.elapsed = seconds_since(start);
    c.budget_ok = c.elapsed < c.budget;
    criteria.push_back(std::move(c));
  }

  {
    Criterion c{9, "exact orthogonality and degree-sum validation for every corpus table", {}};
    auto start = Clock::now();
    for (const std::string& spec : qga::builtin_corpus())
      c.checks.push_back(qga::orthogonality_check(spec));
    c.elapsed = seconds_since(start);
    criteria.push_back(std::move(c));
  }

  int passed = 0;
  for (const Criterion& c : criteria) {
    report(c);
    if (c.pass()) ++passed;
  }
  std::cout << "acceptance: " << passed << "/" << criteria.size() << " criteria passed\n";
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
