#include "qga/suites.hpp"

#include "qga/camina.hpp"
#include "qga/char_table.hpp"
#include "qga/families.hpp"
#include "qga/group_algebra.hpp"
#include "qga/group_json.hpp"
#include "qga/numtheory.hpp"
#include "qga/wedderburn.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace qga {

bool SuiteReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

const std::vector<std::string>& builtin_corpus() {
  static const std::vector<std::string> corpus = {
      "cyclic:1",
      "cyclic:2",
      "cyclic:3",
      "cyclic:4",
      "cyclic:6",
      "cyclic:8",
      "cyclic:9",
      "cyclic:12",
      "cyclic:16",
      "abelian:2,2",
      "abelian:2,4",
      "abelian:4,4",
      "abelian:3,9",
      "elem:2^3",
      "elem:3^2",
      "elem:5^2",
      "dihedral:8",
      "quaternion:8",
      "extraspecial:p=2,n=1,type=+",
      "extraspecial:p=2,n=1,type=-",
      "extraspecial:p=2,n=2,type=+",
      "extraspecial:p=2,n=2,type=-",
      "extraspecial:p=2,n=3,type=+",
      "extraspecial:p=2,n=3,type=-",
      "extraspecial:p=3,n=1,exp=p",
      "extraspecial:p=3,n=1,exp=p2",
      "extraspecial:p=5,n=1,exp=p",
      "extraspecial:p=5,n=1,exp=p2",
      "extraspecial:p=3,n=2,exp=p",
      "extraspecial:p=3,n=2,exp=p2",
  };
  return corpus;
}

namespace {

const Group& cached_group(const std::string& spec) {
  static std::map<std::string, Group> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(spec);
  if (it == cache.end()) it = cache.emplace(spec, build_family(parse_family_spec(spec))).first;
  return it->second;
}

const CharacterTable& cached_table(const std::string& spec) {
  static std::map<std::string, CharacterTable> cache;
  static std::mutex m;
  const Group& g = cached_group(spec);
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(spec);
  if (it == cache.end()) it = cache.emplace(spec, dixon_character_table(g)).first;
  return it->second;
}

const CaminaProfile& cached_profile(const std::string& spec) {
  static std::map<std::string, CaminaProfile> cache;
  static std::mutex m;
  const Group& g = cached_group(spec);
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(spec);
  if (it == cache.end()) it = cache.emplace(spec, camina_profile(g)).first;
  return it->second;
}

Integer ipow(long base, long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

std::string join_notes(const std::vector<std::string>& notes) {
  std::ostringstream os;
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) os << "; ";
    os << notes[i];
  }
  return os.str();
}

bool is_two_power(int n) { return n >= 2 && (n & (n - 1)) == 0; }

// partitions of e in weakly decreasing order
void partitions_rec(long e, long max_part, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (long part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(e - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<long>> partitions(long e) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  partitions_rec(e, e, cur, out);
  return out;
}

long oracle_quaternion_count(const CharacterTable& t) {
  long k = 0;
  for (const GaloisClass& cls : galois_partition(t)) {
    if (cls.degree == 1) continue;
    if (character_invariants(t, cls.members.front()).fs_indicator == -1) ++k;
  }
  return k;
}

} // namespace

std::vector<std::vector<long>> abelian_factor_lists(long max_order) {
  std::vector<std::vector<long>> out;
  for (long n = 1; n <= max_order; ++n) {
    // one list per choice of partition of each prime exponent
    std::vector<std::vector<std::vector<long>>> per_prime;  // prime -> partition -> factor list
    for (auto [p, e] : factorize(static_cast<std::uint64_t>(n))) {
      std::vector<std::vector<long>> lists;
      for (const auto& part : partitions(e)) {
        std::vector<long> factors;
        for (long part_e : part) factors.push_back(ipow(static_cast<long>(p), part_e).get_si());
        lists.push_back(std::move(factors));
      }
      per_prime.push_back(std::move(lists));
    }
    std::vector<std::vector<long>> combined = {{}};
    for (const auto& lists : per_prime) {
      std::vector<std::vector<long>> next;
      for (const auto& base : combined)
        for (const auto& add : lists) {
          std::vector<long> f = base;
          f.insert(f.end(), add.begin(), add.end());
          next.push_back(std::move(f));
        }
      combined = std::move(next);
    }
    for (auto& f : combined) {
      if (f.empty()) f.push_back(1);  // trivial group
      std::sort(f.begin(), f.end());
      out.push_back(std::move(f));
    }
  }
  return out;
}

CheckResult formula_oracle_check(const std::string& spec) {
  CheckResult r{"formula_oracle/" + spec, false, ""};
  const Group& g = cached_group(spec);
  WedderburnDecomposition formula = decompose_camina(g, cached_profile(spec));
  WedderburnDecomposition oracle = decompose_oracle(cached_table(spec));
  DecompositionReport rep = verify_decomposition(formula, oracle);
  r.pass = rep.match && rep.dimensions_ok;
  r.detail = r.pass ? decomposition_pretty(formula) : join_notes(rep.notes);
  return r;
}

std::vector<CheckResult> pinned_decomposition_checks() {
  std::vector<CheckResult> out;
  struct Pin {
    const char* spec;
    long p;
  };
  for (Pin pin : {Pin{"extraspecial:p=3,n=1,exp=p", 3}, Pin{"extraspecial:p=5,n=1,exp=p", 5}}) {
    long p = pin.p;
    std::vector<SimpleComponent> parts;
    parts.push_back({1, 1, 1, DivisionKind::field});
    parts.push_back({(p * p - 1) / (p - 1), 1, p, DivisionKind::field});
    parts.push_back({1, p, p, DivisionKind::field});
    WedderburnDecomposition expected = canonical_decomposition(p * p * p, std::move(parts));
    WedderburnDecomposition got =
        decompose_camina(cached_group(pin.spec), cached_profile(pin.spec));
    CheckResult r{"pinned_decomposition/order_" + std::to_string(p * p * p), got == expected, ""};
    r.detail = r.pass ? decomposition_pretty(got)
                      : "got " + decomposition_pretty(got) + " expected " + decomposition_pretty(expected);
    out.push_back(std::move(r));
  }
  return out;
}

CheckResult perlis_walker_check(long order) {
  CheckResult r{"perlis_walker/order_" + std::to_string(order), false, ""};
  int groups = 0;
  for (const auto& factors : abelian_factor_lists(order)) {
    Integer prod = 1;
    for (long f : factors) prod *= f;
    if (prod != order) continue;
    FamilySpec spec;
    spec.family = Family::abelian;
    spec.factors = factors;
    Group g = build_family(spec);
    WedderburnDecomposition formula = decompose_abelian(g);
    WedderburnDecomposition oracle = decompose_oracle(g);
    if (!(formula == oracle)) {
      std::ostringstream os;
      os << "mismatch at factors";
      for (long f : factors) os << " " << f;
      r.detail = os.str();
      return r;
    }
    ++groups;
  }
  r.pass = groups > 0;
  r.detail = std::to_string(groups) + " groups";
  return r;
}

std::vector<CheckResult> quaternion_count_checks() {
  std::vector<CheckResult> out;
  struct Pin {
    const char* spec;
    long k;
  };
  for (Pin pin : {Pin{"dihedral:8", 0}, Pin{"quaternion:8", 1},
                  Pin{"extraspecial:p=2,n=2,type=+", 0}, Pin{"extraspecial:p=2,n=2,type=-", 1}}) {
    long got = quaternion_count(cached_group(pin.spec));
    CheckResult r{std::string("quaternion_count/") + pin.spec, got == pin.k,
                  "k=" + std::to_string(got) + " expected " + std::to_string(pin.k)};
    out.push_back(std::move(r));
  }
  for (const std::string& spec : builtin_corpus()) {
    const Group& g = cached_group(spec);
    if (!is_two_power(g.order())) continue;
    long structural = quaternion_count(g);
    long oracle = oracle_quaternion_count(cached_table(spec));
    CheckResult r{"quaternion_count/oracle_match/" + spec, structural == oracle,
                  "squaring-map k=" + std::to_string(structural) +
                      ", indicator k=" + std::to_string(oracle)};
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> isoclinic_pair_checks() {
  std::vector<CheckResult> out;
  struct Pair {
    long order;
    const char* a;
    const char* b;
  };
  for (Pair pr : {Pair{27, "extraspecial:p=3,n=1,exp=p", "extraspecial:p=3,n=1,exp=p2"},
                  Pair{125, "extraspecial:p=5,n=1,exp=p", "extraspecial:p=5,n=1,exp=p2"},
                  Pair{243, "extraspecial:p=3,n=2,exp=p", "extraspecial:p=3,n=2,exp=p2"}}) {
    WedderburnDecomposition da = decompose_camina(cached_group(pr.a), cached_profile(pr.a));
    WedderburnDecomposition db = decompose_camina(cached_group(pr.b), cached_profile(pr.b));
    CheckResult r{"isoclinic/order_" + std::to_string(pr.order), da == db, ""};
    r.detail = r.pass ? decomposition_pretty(da)
                      : decomposition_pretty(da) + " vs " + decomposition_pretty(db);
    out.push_back(std::move(r));
  }
  // at p = 2 the corresponding pair genuinely differs; report, don't equate
  WedderburnDecomposition d8 =
      decompose_camina(cached_group("dihedral:8"), cached_profile("dihedral:8"));
  WedderburnDecomposition q8 =
      decompose_camina(cached_group("quaternion:8"), cached_profile("quaternion:8"));
  CheckResult r{"isoclinic/order_8_reported", !(d8 == q8),
                decomposition_pretty(d8) + " vs " + decomposition_pretty(q8)};
  out.push_back(std::move(r));
  return out;
}

CheckResult orthogonality_check(const std::string& spec) {
  CheckResult r{"orthogonality/" + spec, false, ""};
  const CharacterTable& t = cached_table(spec);
  try {
    verify_character_table(t);
    r.pass = true;
    r.detail = std::to_string(t.chars.size()) + " characters, exact relations hold";
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

CheckResult idempotent_check(const std::string& spec, int threads) {
  CheckResult r{"idempotents/" + spec, false, ""};
  const Group& g = cached_group(spec);
  const CharacterTable& t = cached_table(spec);
  const CaminaProfile& prof = cached_profile(spec);
  CompleteSetReport rep = verify_complete_set(t, prof, threads);

  std::vector<GaloisClass> classes = galois_partition(t);
  bool dims_matched = true;
  bool predictions_ok = true;
  int predicted = 0;
  bool predictions_required = g.is_abelian() || (prof.is_camina_group && prof.nilpotency_class == 2);
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const IdempotentCheck& chk = rep.checks[i];
    int m = schur_index_policy(g, classes[i]);
    SimpleComponent comp{1, chk.degree / m, chk.conductor,
                         m == 2 ? DivisionKind::rational_quaternion : DivisionKind::field};
    if (comp.dimension_each() != chk.dimension) dims_matched = false;
    if (chk.has_prediction) ++predicted;
    bool must_predict = chk.degree == 1 || predictions_required;
    if (must_predict && !(chk.has_prediction && chk.prediction_matches)) predictions_ok = false;
  }
  r.pass = rep.all_pass && dims_matched && predictions_ok;
  std::ostringstream os;
  os << rep.checks.size() << " classes, " << predicted << " closed-form matches";
  if (!rep.pairwise_orthogonal) os << "; pairwise products nonzero";
  if (!rep.sums_to_one) os << "; sum differs from 1";
  if (!dims_matched) os << "; component dimension mismatch";
  if (!predictions_ok) os << "; closed-form idempotent mismatch";
  if (!rep.all_pass) os << "; axiom failure";
  r.detail = os.str();
  return r;
}

std::vector<CheckResult> pinned_dimension_checks() {
  std::vector<CheckResult> out;
  {
    const CharacterTable& t = cached_table("quaternion:8");
    long dim = -1;
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
      if (t.chars[i].degree == 2) dim = component_dimension(rational_idempotent(t, static_cast<int>(i)));
    }
    out.push_back({"pinned_dimension/quaternion:8", dim == 4,
                   "quaternionic component has dimension " + std::to_string(dim)});
  }
  {
    const CharacterTable& t = cached_table("extraspecial:p=3,n=1,exp=p");
    long dim = -1;
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
      if (t.chars[i].degree == 3) {
        dim = component_dimension(rational_idempotent(t, static_cast<int>(i)));
        break;
      }
    }
    out.push_back({"pinned_dimension/extraspecial:p=3,n=1,exp=p", dim == 18,
                   "matrix component has dimension " + std::to_string(dim)});
  }
  return out;
}

CheckResult vanishing_equivalence_check(const std::string& spec) {
  CheckResult r{"vanishing_equivalence/" + spec, false, ""};
  const Group& g = cached_group(spec);
  const CharacterTable& t = cached_table(spec);
  int n = g.order();

  std::vector<Subgroup> kernels;
  kernels.reserve(t.chars.size());
  for (std::size_t c = 0; c < t.chars.size(); ++c)
    kernels.push_back(character_invariants(t, static_cast<int>(c)).kernel);

  long pairs = 0;
  for (const Subgroup& nsub : normal_subgroups(g)) {
    if (nsub.size() <= 1 || nsub.size() >= n) continue;
    std::vector<int> outside_kernel;  // characters with N not inside the kernel
    for (std::size_t c = 0; c < t.chars.size(); ++c) {
      if (!is_subgroup_subset(nsub, kernels[c])) outside_kernel.push_back(static_cast<int>(c));
    }
    for (int x = 0; x < n; ++x) {
      if (nsub.contains(x)) continue;
      int cls = t.classes.class_of[static_cast<std::size_t>(x)];
      bool all_vanish = true;
      for (int c : outside_kernel) {
        if (!t.chars[static_cast<std::size_t>(c)].values[static_cast<std::size_t>(cls)].is_zero()) {
          all_vanish = false;
          break;
        }
      }
      bool coset_in_class = true;
      for (int m : nsub.members) {
        if (t.classes.class_of[static_cast<std::size_t>(g.mul(x, m))] != cls) {
          coset_in_class = false;
          break;
        }
      }
      if (all_vanish != coset_in_class) {
        std::ostringstream os;
        os << "element " << x << " with |N|=" << nsub.size() << ": vanishing=" << all_vanish
           << " coset-in-class=" << coset_in_class;
        r.detail = os.str();
        return r;
      }
      ++pairs;
    }
  }
  r.pass = true;
  r.detail = std::to_string(pairs) + " (N, g) pairs agree";
  return r;
}

CheckResult orbit_size_check(const std::string& spec) {
  CheckResult r{"orbit_size/" + spec, false, ""};
  const CharacterTable& t = cached_table(spec);
  for (const GaloisClass& cls : galois_partition(t)) {
    auto expected = euler_phi(static_cast<std::uint64_t>(cls.field_conductor));
    if (cls.members.size() != expected) {
      std::ostringstream os;
      os << "class of character " << cls.members.front() << " has " << cls.members.size()
         << " members, phi(" << cls.field_conductor << ")=" << expected;
      r.detail = os.str();
      return r;
    }
  }
  r.pass = true;
  r.detail = std::to_string(galois_partition(t).size()) + " classes";
  return r;
}

std::vector<CheckResult> central_pair_checks(const std::string& spec) {
  std::vector<CheckResult> out;
  const Group& g = cached_group(spec);
  Subgroup center = characteristic_subgroups(g).center;
  if (center.size() <= 1 || center.size() >= g.order()) return out;
  if (!is_camina_pair(g, center)) return out;

  const CharacterTable& t = cached_table(spec);
  int n = g.order();
  std::uint64_t q = 0;
  bool square = perfect_square_root(static_cast<std::uint64_t>(n / center.size()), q);

  // characters whose kernel misses part of the center
  std::vector<int> members;
  std::vector<Subgroup> kernels(t.chars.size());
  for (std::size_t c = 0; c < t.chars.size(); ++c) {
    kernels[c] = character_invariants(t, static_cast<int>(c)).kernel;
    if (!is_subgroup_subset(center, kernels[c])) members.push_back(static_cast<int>(c));
  }

  {
    CheckResult r{"central_pair/" + spec + "/character_structure", false, ""};
    bool ok = square && static_cast<long>(members.size()) == center.size() - 1;
    std::set<std::vector<std::string>> restrictions;
    for (int c : members) {
      const Character& chi = t.chars[static_cast<std::size_t>(c)];
      if (chi.degree != static_cast<int>(q)) ok = false;
      for (std::size_t j = 0; j < chi.values.size(); ++j) {
        if (!center.contains(t.classes.representatives[j]) && !chi.values[j].is_zero()) ok = false;
      }
      // restriction to the center is q times a multiplicative character
      std::vector<std::string> restriction;
      for (int z : center.members) {
        restriction.push_back(chi.values[static_cast<std::size_t>(t.classes.class_of[static_cast<std::size_t>(z)])].str());
      }
      restrictions.insert(std::move(restriction));
      Rational qr = make_rational(static_cast<long>(q));
      for (int z1 : center.members) {
        for (int z2 : center.members) {
          Cyclotomic lhs = chi.values[static_cast<std::size_t>(
                               t.classes.class_of[static_cast<std::size_t>(g.mul(z1, z2))])] *
                           qr;
          Cyclotomic rhs = chi.values[static_cast<std::size_t>(t.classes.class_of[static_cast<std::size_t>(z1)])];
          rhs *= chi.values[static_cast<std::size_t>(t.classes.class_of[static_cast<std::size_t>(z2)])];
          if (!(lhs == rhs)) ok = false;
        }
      }
    }
    if (restrictions.size() != members.size()) ok = false;  // distinct restrictions
    r.pass = ok;
    std::ostringstream os;
    os << members.size() << " characters off the center, degree " << q;
    r.detail = os.str();
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"central_pair/" + spec + "/kernel_galois", true, ""};
    std::vector<int> class_id(t.chars.size(), -1);
    std::vector<GaloisClass> classes = galois_partition(t);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (int m : classes[i].members) class_id[static_cast<std::size_t>(m)] = static_cast<int>(i);
    long compared = 0;
    for (std::size_t a = 0; a < members.size() && r.pass; ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        bool same_kernel = kernels[static_cast<std::size_t>(members[a])] ==
                           kernels[static_cast<std::size_t>(members[b])];
        bool same_class = class_id[static_cast<std::size_t>(members[a])] ==
                          class_id[static_cast<std::size_t>(members[b])];
        if (same_kernel != same_class) {
          r.pass = false;
          r.detail = "characters " + std::to_string(members[a]) + " and " +
                     std::to_string(members[b]) + ": same-kernel=" + std::to_string(same_kernel) +
                     " same-class=" + std::to_string(same_class);
          break;
        }
        ++compared;
      }
    }
    if (r.pass) r.detail = std::to_string(compared) + " pairs agree";
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"central_pair/" + spec + "/conductor_counts", true, ""};
    Group zg = subgroup_as_group(g, center);
    AbelianInvariants inv = abelian_invariants(zg);
    for (auto [d, count] : inv.count_of_order) {
      if (d == 1) continue;
      long a_d = count / static_cast<long>(euler_phi(static_cast<std::uint64_t>(d)));
      long target = (d % 4 == 2) ? d / 2 : d;  // Q(zeta_2) = Q carries conductor 1
      std::set<std::vector<int>> distinct_kernels;
      for (int c : members) {
        if (t.chars[static_cast<std::size_t>(c)].conductor == target)
          distinct_kernels.insert(kernels[static_cast<std::size_t>(c)].members);
      }
      if (static_cast<long>(distinct_kernels.size()) != a_d) {
        r.pass = false;
        r.detail = "conductor " + std::to_string(d) + ": " +
                   std::to_string(distinct_kernels.size()) + " kernels, " + std::to_string(a_d) +
                   " cyclic subgroups";
        break;
      }
    }
    if (r.pass) r.detail = "kernel counts match cyclic subgroup counts of the center";
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> class3_identity_checks() {
  std::vector<CheckResult> out;
  for (long p : {3L, 5L, 7L}) {
    for (long n : {2L, 4L}) {
      for (long z : {1L, 2L}) {
        std::ostringstream name;
        name << "class3_identity/p" << p << "_n" << n << "_z" << z;
        Integer p2n = ipow(p, 2 * n), pn = ipow(p, n), p3n = ipow(p, 3 * n), pz = ipow(p, z);
        Integer lhs = 1 + (p2n - 1) + p2n * (pn - 1) + p3n * (pz - 1);
        Integer rhs = ipow(p, 3 * n + z);
        bool pass = lhs == rhs;
        Integer total = decompose_camina_class3_params(p, n, z).total_dimension();
        pass = pass && total == rhs;
        out.push_back({name.str(), pass,
                       "component dimensions sum to " + total.get_str()});
      }
    }
  }
  return out;
}

std::vector<CheckResult> class3_file_checks(const std::string& path, int threads) {
  std::vector<CheckResult> out;
  Group g = load_group_file(path);
  CaminaProfile prof = camina_profile(g);

  CheckResult structural{"class3/structural", false, ""};
  structural.pass = prof.is_camina_group && prof.nilpotency_class == 3;
  std::vector<std::string> failing;
  for (const StructuralCheck& c : prof.checks) {
    if (!c.pass) failing.push_back(c.name);
  }
  if (!failing.empty()) structural.pass = false;
  structural.detail = structural.pass
                          ? "class-3 Camina group of order " + std::to_string(g.order())
                          : "failing: " + join_notes(failing);
  out.push_back(structural);
  if (!out.back().pass) {
    out.push_back({"class3/formula_vs_oracle", false, "not run: structural checks failed"});
    out.push_back({"class3/idempotent_dichotomy", false, "not run: structural checks failed"});
    return out;
  }

  CharacterTable t = dixon_character_table(g);
  {
    WedderburnDecomposition formula = decompose_camina(g, prof);
    WedderburnDecomposition oracle = decompose_oracle(t);
    DecompositionReport rep = verify_decomposition(formula, oracle);
    out.push_back({"class3/formula_vs_oracle", rep.match && rep.dimensions_ok,
                   rep.match ? decomposition_pretty(formula) : join_notes(rep.notes)});
  }
  {
    CompleteSetReport rep = verify_complete_set(t, prof, threads);
    bool ok = rep.all_pass;
    long derived_side = 0, center_side = 0;
    for (const IdempotentCheck& chk : rep.checks) {
      if (!(chk.has_prediction && chk.prediction_matches)) ok = false;
      if (chk.degree > 1) {
        if (chk.prediction_kind == "epsilon(G',N)") ++derived_side;
        else if (chk.prediction_kind == "epsilon(Z,N)") ++center_side;
      }
    }
    std::ostringstream os;
    os << rep.checks.size() << " classes; nonlinear split " << derived_side << " over G', "
       << center_side << " over Z";
    out.push_back({"class3/idempotent_dichotomy", ok, os.str()});
  }
  return out;
}

SuiteReport run_core_suite(int threads) {
  (void)threads;
  SuiteReport rep;
  rep.suite = "core";
  for (const std::string& spec : builtin_corpus()) rep.checks.push_back(orthogonality_check(spec));
  for (const std::string& spec : builtin_corpus()) rep.checks.push_back(formula_oracle_check(spec));
  for (CheckResult& c : pinned_decomposition_checks()) rep.checks.push_back(std::move(c));
  for (long order = 1; order <= 32; ++order) rep.checks.push_back(perlis_walker_check(order));
  for (CheckResult& c : quaternion_count_checks()) rep.checks.push_back(std::move(c));
  for (CheckResult& c : isoclinic_pair_checks()) rep.checks.push_back(std::move(c));
  return rep;
}

SuiteReport run_idempotents_suite(int threads) {
  SuiteReport rep;
  rep.suite = "idempotents";
  for (const std::string& spec : builtin_corpus()) {
    if (cached_group(spec).order() > 128) continue;
    rep.checks.push_back(idempotent_check(spec, threads));
  }
  for (CheckResult& c : pinned_dimension_checks()) rep.checks.push_back(std::move(c));
  return rep;
}

SuiteReport run_lemmas_suite(int threads) {
  (void)threads;
  SuiteReport rep;
  rep.suite = "lemmas";
  for (const std::string& spec : builtin_corpus()) {
    if (cached_group(spec).order() <= 64) rep.checks.push_back(vanishing_equivalence_check(spec));
  }
  for (const std::string& spec : builtin_corpus()) rep.checks.push_back(orbit_size_check(spec));
  for (const std::string& spec : builtin_corpus()) {
    for (CheckResult& c : central_pair_checks(spec)) rep.checks.push_back(std::move(c));
  }
  return rep;
}

SuiteReport run_class3_suite(const std::string& group_file, int threads) {
  SuiteReport rep;
  rep.suite = "class3";
  for (CheckResult& c : class3_identity_checks()) rep.checks.push_back(std::move(c));
  if (!group_file.empty()) {
    for (CheckResult& c : class3_file_checks(group_file, threads)) rep.checks.push_back(std::move(c));
  }
  return rep;
}

std::string suite_report_json(const SuiteReport& r) {
  nlohmann::json doc;
  doc["suite"] = r.suite;
  doc["pass"] = r.all_pass();
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : r.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2);
}

std::string suite_report_pretty(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << "\n";
  for (const CheckResult& c : r.checks) {
    os << (c.pass ? "  pass  " : "  FAIL  ") << c.name;
    if (!c.detail.empty()) os << " — " << c.detail;
    os << "\n";
  }
  os << (r.all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

} // namespace qga
