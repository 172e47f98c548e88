#include "qga/camina.hpp"

#include "qga/numtheory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qga {

bool is_camina_pair(const Group& g, const Subgroup& n) {
  if (n.size() <= 1 || n.size() >= g.order()) return false;  // proper and nontrivial
  if (!is_normal(g, n)) return false;
  ConjugacyPartition part = conjugacy_classes(g);
  for (int x = 0; x < g.order(); ++x) {
    if (n.contains(x)) continue;
    int cx = part.class_of[static_cast<std::size_t>(x)];
    for (int h : n.members) {
      if (part.class_of[static_cast<std::size_t>(g.mul(x, h))] != cx) return false;
    }
  }
  return true;
}

namespace {

long quotient_exponent(const Group& g, const Subgroup& h, const Subgroup& n) {
  // exponent of h / n, where n <= h <= g and n is normal in h
  std::vector<int> map;
  Group sub = subgroup_as_group(g, h, &map);
  std::vector<int> local_of(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < map.size(); ++i) local_of[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
  Subgroup n_local;
  n_local.mask.assign(static_cast<std::size_t>(sub.order()), 0);
  for (int x : n.members) {
    int lx = local_of[static_cast<std::size_t>(x)];
    if (lx < 0) throw std::invalid_argument("quotient_exponent: inner subgroup not contained in outer");
    n_local.mask[static_cast<std::size_t>(lx)] = 1;
    n_local.members.push_back(lx);
  }
  std::sort(n_local.members.begin(), n_local.members.end());
  return quotient(sub, n_local).group.exponent();
}

bool is_even_prime_power(long value, long p, long* half_exp) {
  // value == p^{2m}?  writes m
  long e = 0;
  while (value % p == 0) { value /= p; ++e; }
  if (value != 1 || e % 2 != 0) return false;
  if (half_exp) *half_exp = e / 2;
  return true;
}

} // namespace

CaminaProfile camina_profile(const Group& g) {
  CaminaProfile prof;
  CharacteristicData cd = characteristic_subgroups(g);
  prof.center = cd.center;
  prof.derived = cd.derived;
  prof.second_center = cd.second_center;
  prof.lower_central = cd.lower_central;
  prof.nilpotency_class = cd.nilpotency_class.value_or(0);

  std::uint64_t p = (g.order() > 1) ? prime_power_base(static_cast<std::uint64_t>(g.order())) : 0;
  prof.is_p_group = p != 0;
  prof.p = static_cast<long>(p);

  auto note = [&prof](const std::string& name, bool pass, const std::string& detail) {
    prof.checks.push_back({name, pass, detail});
  };

  bool abelian = g.is_abelian();
  if (abelian) {
    prof.is_camina_group = false;
    prof.vz = false;
    note("nonabelian", false, "group is abelian; no Camina pair exists");
    return prof;
  }

  // VZ: every noncentral element has centralizer of order |G/G'|
  {
    bool vz = true;
    long expect = g.order() / prof.derived.size();
    for (int x = 0; x < g.order() && vz; ++x) {
      if (prof.center.contains(x)) continue;
      long cent = 0;
      for (int y = 0; y < g.order(); ++y) {
        if (g.mul(x, y) == g.mul(y, x)) ++cent;
      }
      if (cent != expect) vz = false;
    }
    prof.vz = vz;
  }

  // any Camina kernel contains the center (central classes are singletons) and
  // lies inside the derived subgroup (classes stay inside G'-cosets), so the
  // search space is the subgroup interval [Z(G), G']
  for (Subgroup& n : subgroups_between(g, prof.center, prof.derived)) {
    if (n.size() > 1 && n.size() < g.order() && is_normal(g, n) && is_camina_pair(g, n))
      prof.camina_pair_kernels.push_back(std::move(n));
  }

  prof.is_camina_group = prof.derived.size() > 1 && prof.derived.size() < g.order() &&
                         is_camina_pair(g, prof.derived);

  if (!prof.is_camina_group) {
    note("camina_group", false, "(G, G') is not a Camina pair");
    return prof;
  }
  note("camina_group", true, "(G, G') is a Camina pair");
  note("prime_power_order", prof.is_p_group,
       prof.is_p_group ? "order is a power of " + std::to_string(prof.p)
                       : "order is not a prime power");

  int cls = prof.nilpotency_class;
  note("nilpotency_class_le_3", cls >= 2 && cls <= 3, "class " + std::to_string(cls));

  note("camina_pair_kernels", !prof.camina_pair_kernels.empty(),
       std::to_string(prof.camina_pair_kernels.size()) +
           " kernel(s) in the interval [Z(G), G']");

  if (cls == 2) {
    bool eq = prof.derived == prof.center;
    note("derived_equals_center", eq,
         "|G'| = " + std::to_string(prof.derived.size()) +
             ", |Z| = " + std::to_string(prof.center.size()));
    note("vanishing_off_center", prof.vz,
         prof.vz ? "noncentral centralizers all have order |G/G'|"
                 : "centralizer orders vary off the center");
    long half = 0;
    bool sq = prof.is_p_group &&
              is_even_prime_power(g.order() / prof.center.size(), prof.p, &half);
    note("center_index_even_power", sq,
         "|G/Z| = " + std::to_string(g.order() / prof.center.size()));
  } else if (cls == 3) {
    note("odd_prime", prof.p != 2, "p = " + std::to_string(prof.p));
    bool center_kernel = false;
    for (const Subgroup& n : prof.camina_pair_kernels) {
      if (n == prof.center) center_kernel = true;
    }
    note("center_is_camina_kernel", center_kernel,
         center_kernel ? "(G, Z(G)) is a Camina pair" : "(G, Z(G)) is not a Camina pair");
    bool d_eq_z2 = prof.derived == prof.second_center;
    note("derived_equals_second_center", d_eq_z2,
         "|G'| = " + std::to_string(prof.derived.size()) +
             ", |Z2| = " + std::to_string(prof.second_center.size()));
    bool z_eq_g3 = prof.lower_central.size() >= 3 && prof.center == prof.lower_central[2];
    note("center_equals_third_lower_central", z_eq_g3,
         "|Z| = " + std::to_string(prof.center.size()));
    if (prof.is_p_group) {
      long n_half = 0;
      bool dq_sq = is_even_prime_power(g.order() / prof.derived.size(), prof.p, &n_half);
      note("derived_index_even_power", dq_sq,
           "|G/G'| = " + std::to_string(g.order() / prof.derived.size()));
      long ci_half = 0;
      bool ci_sq = is_even_prime_power(g.order() / prof.center.size(), prof.p, &ci_half);
      note("center_index_even_power", ci_sq,
           "|G/Z| = " + std::to_string(g.order() / prof.center.size()));
      // |G'/Z| should be p^n with |G/G'| = p^{2n}
      if (dq_sq) {
        long pn = 1;
        for (long i = 0; i < n_half; ++i) pn *= prof.p;
        note("derived_over_center_matches", prof.derived.size() / prof.center.size() == pn,
             "|G'/Z| = " + std::to_string(prof.derived.size() / prof.center.size()));
      }
      bool layers = true;
      std::ostringstream detail;
      long e1 = quotient_exponent(g, full_subgroup(g), prof.derived);
      long e2 = quotient_exponent(g, prof.derived, prof.center);
      Subgroup ztriv = trivial_subgroup(g);
      long e3 = quotient_exponent(g, prof.center, ztriv);
      detail << "exp(G/G') = " << e1 << ", exp(G'/Z) = " << e2 << ", exp(Z) = " << e3;
      layers = (e1 == prof.p) && (e2 == prof.p) && (e3 == prof.p);
      note("layers_exponent_p", layers, detail.str());
    }
  }
  return prof;
}

} // namespace qga
