#include "qga/group.hpp"

#include "qga/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace qga {

namespace {

void verify_table(const std::vector<int>& t, int n, const VerifyOptions& opts) {
  if (static_cast<std::size_t>(n) * n != t.size())
    throw std::invalid_argument("group table is not square");
  for (int v : t) {
    if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (int g = 0; g < n; ++g) {
    if (t[static_cast<std::size_t>(0) * n + g] != g || t[static_cast<std::size_t>(g) * n + 0] != g)
      throw std::invalid_argument("element 0 is not an identity");
  }
  // Latin square
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = t[static_cast<std::size_t>(a) * n + b];
      if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("group table is not a Latin square");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      int v = t[static_cast<std::size_t>(a) * n + b];
      if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("group table is not a Latin square");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  auto mul = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };
  // two-sided inverses
  for (int a = 0; a < n; ++a) {
    int invA = -1;
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == 0) { invA = b; break; }
    }
    if (invA < 0 || mul(invA, a) != 0)
      throw std::invalid_argument("group table has an element without a two-sided inverse");
  }
  // associativity
  if (n <= opts.exhaustive_limit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = mul(a, b);
        for (int c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c)))
            throw std::invalid_argument("group table is not associative");
        }
      }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> dist(0, n - 1);
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
      int a = dist(rng), b = dist(rng), c = dist(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw std::invalid_argument("group table is not associative");
    }
  }
}

} // namespace

Group Group::from_table(std::vector<int> flat_table, const VerifyOptions& opts) {
  std::size_t sz = flat_table.size();
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(sz))));
  // recover n robustly
  while (static_cast<std::size_t>(n) * n < sz) ++n;
  while (n > 0 && static_cast<std::size_t>(n) * n > sz) --n;
  if (n <= 0 || static_cast<std::size_t>(n) * n != sz)
    throw std::invalid_argument("group table is not square");
  verify_table(flat_table, n, opts);
  auto inv = std::make_shared<std::vector<int>>(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (flat_table[static_cast<std::size_t>(a) * n + b] == 0) { (*inv)[static_cast<std::size_t>(a)] = b; break; }
    }
  }
  Group g;
  g.n_ = n;
  g.table_ = std::make_shared<const std::vector<int>>(std::move(flat_table));
  g.inv_ = std::move(inv);
  return g;
}

int Group::power(int g, long k) const {
  long m = element_order(g);
  k %= m;
  if (k < 0) k += m;
  int acc = 0;
  int base = g;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

int Group::element_order(int g) const {
  int x = g, ord = 1;
  while (x != 0) {
    x = mul(x, g);
    ++ord;
  }
  return ord;
}

long Group::exponent() const {
  long e = 1;
  for (int g = 0; g < n_; ++g) e = std::lcm(e, static_cast<long>(element_order(g)));
  return e;
}

bool Group::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }

Group close_generators(int degree, const std::vector<std::vector<int>>& generators,
                       int cap, const VerifyOptions& opts) {
  if (degree <= 0) throw std::invalid_argument("permutation degree must be positive");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw std::invalid_argument("permutation length does not match degree");
    std::vector<char> seen(static_cast<std::size_t>(degree));
    for (int v : p) {
      if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("generator is not a permutation");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  std::vector<int> identity(static_cast<std::size_t>(degree));
  std::iota(identity.begin(), identity.end(), 0);

  auto compose = [degree](const std::vector<int>& f, const std::vector<int>& g) {
    // (f*g)(x) = f(g(x))
    std::vector<int> h(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) h[static_cast<std::size_t>(x)] = f[static_cast<std::size_t>(g[static_cast<std::size_t>(x)])];
    return h;
  };

  std::vector<std::vector<int>> elements{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  std::queue<int> work;
  work.push(0);
  while (!work.empty()) {
    int i = work.front();
    work.pop();
    for (const auto& gen : generators) {
      std::vector<int> prod = compose(elements[static_cast<std::size_t>(i)], gen);
      if (index.emplace(prod, static_cast<int>(elements.size())).second) {
        elements.push_back(prod);
        if (static_cast<int>(elements.size()) > cap)
          throw std::invalid_argument("generated group exceeds the element cap");
        work.push(static_cast<int>(elements.size()) - 1);
      }
    }
  }
  int n = static_cast<int>(elements.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto it = index.find(compose(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]));
      if (it == index.end()) throw std::logic_error("closure not closed");
      table[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  }
  return Group::from_table(std::move(table), opts);
}

ConjugacyPartition conjugacy_classes(const Group& g) {
  int n = g.order();
  ConjugacyPartition part;
  part.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int e = 0; e < n; ++e) {
    if (part.class_of[static_cast<std::size_t>(e)] >= 0) continue;
    int ci = static_cast<int>(part.classes.size());
    std::vector<char> in_class(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) in_class[static_cast<std::size_t>(g.conj(x, e))] = 1;
    std::vector<int> cls;
    for (int y = 0; y < n; ++y) {
      if (in_class[static_cast<std::size_t>(y)]) {
        cls.push_back(y);
        part.class_of[static_cast<std::size_t>(y)] = ci;
      }
    }
    part.representatives.push_back(cls.front());
    part.classes.push_back(std::move(cls));
  }
  return part;
}

Subgroup trivial_subgroup(const Group& g) {
  Subgroup s;
  s.members = {0};
  s.mask.assign(static_cast<std::size_t>(g.order()), 0);
  s.mask[0] = 1;
  return s;
}

Subgroup full_subgroup(const Group& g) {
  Subgroup s;
  s.members.resize(static_cast<std::size_t>(g.order()));
  std::iota(s.members.begin(), s.members.end(), 0);
  s.mask.assign(static_cast<std::size_t>(g.order()), 1);
  return s;
}

Subgroup subgroup_closure(const Group& g, const std::vector<int>& gens) {
  int n = g.order();
  std::vector<char> mask(static_cast<std::size_t>(n));
  mask[0] = 1;
  std::queue<int> work;
  work.push(0);
  auto add = [&](int x) {
    if (!mask[static_cast<std::size_t>(x)]) {
      mask[static_cast<std::size_t>(x)] = 1;
      work.push(x);
    }
  };
  for (int x : gens) {
    if (x < 0 || x >= n) throw std::invalid_argument("generator index out of range");
    add(x);
  }
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (int h : gens) add(g.mul(x, h));
  }
  Subgroup s;
  s.mask = std::move(mask);
  for (int x = 0; x < n; ++x) {
    if (s.mask[static_cast<std::size_t>(x)]) s.members.push_back(x);
  }
  return s;
}

Subgroup normal_closure(const Group& g, const std::vector<int>& gens) {
  std::vector<int> all;
  std::vector<char> seen(static_cast<std::size_t>(g.order()));
  for (int s : gens) {
    for (int x = 0; x < g.order(); ++x) {
      int c = g.conj(x, s);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        all.push_back(c);
      }
    }
  }
  return subgroup_closure(g, all);
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (int x = 0; x < g.order(); ++x) {
    for (int s : h.members) {
      if (!h.contains(g.conj(x, s))) return false;
    }
  }
  return true;
}

bool is_subgroup_subset(const Subgroup& inner, const Subgroup& outer) {
  for (int x : inner.members) {
    if (!outer.contains(x)) return false;
  }
  return true;
}

Subgroup subgroup_join(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<int> gens = a.members;
  gens.insert(gens.end(), b.members.begin(), b.members.end());
  return subgroup_closure(g, gens);
}

namespace {

Subgroup center_of(const Group& g) {
  std::vector<int> c;
  for (int z = 0; z < g.order(); ++z) {
    bool central = true;
    for (int x = 0; x < g.order(); ++x) {
      if (g.mul(z, x) != g.mul(x, z)) { central = false; break; }
    }
    if (central) c.push_back(z);
  }
  Subgroup s;
  s.members = std::move(c);
  s.mask.assign(static_cast<std::size_t>(g.order()), 0);
  for (int x : s.members) s.mask[static_cast<std::size_t>(x)] = 1;
  return s;
}

int commutator(const Group& g, int a, int b) {
  // [a, b] = a^{-1} b^{-1} a b
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

} // namespace

CharacteristicData characteristic_subgroups(const Group& g) {
  CharacteristicData data;
  data.center = center_of(g);

  // derived subgroup
  {
    std::vector<int> comms;
    std::vector<char> seen(static_cast<std::size_t>(g.order()));
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        int c = commutator(g, a, b);
        if (!seen[static_cast<std::size_t>(c)]) {
          seen[static_cast<std::size_t>(c)] = 1;
          comms.push_back(c);
        }
      }
    data.derived = subgroup_closure(g, comms);
  }

  // lower central series
  data.lower_central.push_back(full_subgroup(g));
  for (;;) {
    const Subgroup& prev = data.lower_central.back();
    std::vector<int> comms;
    std::vector<char> seen(static_cast<std::size_t>(g.order()));
    for (int a : prev.members)
      for (int b = 0; b < g.order(); ++b) {
        int c = commutator(g, a, b);
        if (!seen[static_cast<std::size_t>(c)]) {
          seen[static_cast<std::size_t>(c)] = 1;
          comms.push_back(c);
        }
      }
    Subgroup next = subgroup_closure(g, comms);
    if (next == prev) break;  // stabilized without reaching 1: not nilpotent
    bool trivial = next.size() == 1;
    data.lower_central.push_back(std::move(next));
    if (trivial) break;
  }
  if (data.lower_central.back().size() == 1) {
    data.nilpotency_class = static_cast<int>(data.lower_central.size()) - 1;
  }

  // second center: preimage of Z(G/Z)
  if (data.center.size() == g.order()) {
    data.second_center = full_subgroup(g);
  } else {
    QuotientResult q = quotient(g, data.center);
    Subgroup zq = center_of(q.group);
    Subgroup s;
    s.mask.assign(static_cast<std::size_t>(g.order()), 0);
    for (int x = 0; x < g.order(); ++x) {
      if (zq.contains(q.projection[static_cast<std::size_t>(x)])) {
        s.mask[static_cast<std::size_t>(x)] = 1;
        s.members.push_back(x);
      }
    }
    data.second_center = std::move(s);
  }
  return data;
}

QuotientResult quotient(const Group& g, const Subgroup& n) {
  if (!n.contains(0)) throw std::invalid_argument("quotient: subgroup must contain the identity");
  if (!is_normal(g, n)) throw std::invalid_argument("quotient: subgroup is not normal");
  int order = g.order();
  std::vector<int> coset_min(static_cast<std::size_t>(order), -1);
  for (int x = 0; x < order; ++x) {
    if (coset_min[static_cast<std::size_t>(x)] >= 0) continue;
    int mn = x;  // elements scanned in ascending order, so x is the coset minimum
    for (int h : n.members) {
      int y = g.mul(x, h);
      coset_min[static_cast<std::size_t>(y)] = mn;
    }
  }
  // cosets indexed by ascending minimum; identity coset (min 0) gets index 0
  std::vector<int> mins;
  for (int x = 0; x < order; ++x) {
    if (coset_min[static_cast<std::size_t>(x)] == x) mins.push_back(x);
  }
  std::vector<int> index_of_min(static_cast<std::size_t>(order), -1);
  for (std::size_t i = 0; i < mins.size(); ++i) index_of_min[static_cast<std::size_t>(mins[i])] = static_cast<int>(i);
  int q = static_cast<int>(mins.size());
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[static_cast<std::size_t>(a) * q + b] =
          index_of_min[static_cast<std::size_t>(coset_min[static_cast<std::size_t>(g.mul(mins[static_cast<std::size_t>(a)], mins[static_cast<std::size_t>(b)]))])];
  QuotientResult out;
  out.group = Group::from_table(std::move(table));
  out.projection.resize(static_cast<std::size_t>(order));
  for (int x = 0; x < order; ++x)
    out.projection[static_cast<std::size_t>(x)] =
        index_of_min[static_cast<std::size_t>(coset_min[static_cast<std::size_t>(x)])];
  return out;
}

AbelianInvariants abelian_invariants(const Group& g) {
  if (!g.is_abelian()) throw std::invalid_argument("abelian_invariants: group is not abelian");
  AbelianInvariants inv;
  std::map<long, long> counts;
  long e = 1;
  for (int x = 0; x < g.order(); ++x) {
    long d = g.element_order(x);
    ++counts[d];
    e = std::lcm(e, d);
  }
  inv.exponent = e;
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(e))) {
    inv.count_of_order[static_cast<long>(d)] = counts.count(static_cast<long>(d)) ? counts[static_cast<long>(d)] : 0;
  }
  return inv;
}

std::vector<Subgroup> normal_subgroups(const Group& g, std::size_t cap) {
  ConjugacyPartition part = conjugacy_classes(g);
  std::vector<Subgroup> atoms;
  for (const auto& cls : part.classes) {
    Subgroup s = subgroup_closure(g, cls);
    atoms.push_back(std::move(s));
  }
  auto key = [](const Subgroup& s) {
    std::string k(s.mask.begin(), s.mask.end());
    return k;
  };
  std::map<std::string, Subgroup> found;
  found.emplace(key(trivial_subgroup(g)), trivial_subgroup(g));
  std::vector<Subgroup> work;
  for (auto& a : atoms) {
    std::string k = key(a);
    if (found.emplace(k, a).second) work.push_back(a);
  }
  while (!work.empty()) {
    Subgroup cur = std::move(work.back());
    work.pop_back();
    std::vector<Subgroup> snapshot;
    snapshot.reserve(found.size());
    for (auto& [k, s] : found) snapshot.push_back(s);
    for (const Subgroup& other : snapshot) {
      Subgroup j = subgroup_join(g, cur, other);
      std::string k = key(j);
      if (found.emplace(k, j).second) {
        work.push_back(std::move(j));
        if (found.size() > cap) throw std::runtime_error("normal subgroup lattice exceeds cap");
      }
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& [k, s] : found) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const Group& g) {
  if (g.order() == 1) return {};
  CharacteristicData data = characteristic_subgroups(g);
  std::vector<Subgroup> cands;
  if (data.nilpotency_class.has_value()) {
    // minimal normal subgroups of a nilpotent group are central of prime order
    std::map<std::vector<int>, Subgroup> uniq;
    for (int z : data.center.members) {
      if (z == 0) continue;
      if (is_prime(static_cast<std::uint64_t>(g.element_order(z)))) {
        Subgroup s = subgroup_closure(g, {z});
        uniq.emplace(s.members, std::move(s));
      }
    }
    for (auto& [k, s] : uniq) cands.push_back(std::move(s));
  } else {
    std::map<std::vector<int>, Subgroup> uniq;
    for (int x = 1; x < g.order(); ++x) {
      Subgroup s = normal_closure(g, {x});
      uniq.emplace(s.members, std::move(s));
    }
    for (auto& [k, s] : uniq) cands.push_back(std::move(s));
  }
  std::vector<Subgroup> out;
  for (const Subgroup& s : cands) {
    bool minimal = true;
    for (const Subgroup& t : cands) {
      if (t.size() < s.size() && t.size() > 1 && is_subgroup_subset(t, s)) { minimal = false; break; }
    }
    if (minimal && s.size() > 1) out.push_back(s);
  }
  return out;
}

std::vector<Subgroup> subgroups_between(const Group& g, const Subgroup& lower,
                                        const Subgroup& upper, std::size_t cap) {
  if (!is_subgroup_subset(lower, upper)) return {};
  std::vector<int> umap;
  Group ug = subgroup_as_group(g, upper, &umap);
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < umap.size(); ++i)
    local[static_cast<std::size_t>(umap[i])] = static_cast<int>(i);
  Subgroup lower_local;
  lower_local.mask.assign(static_cast<std::size_t>(ug.order()), 0);
  for (int x : lower.members) {
    int lx = local[static_cast<std::size_t>(x)];
    lower_local.members.push_back(lx);
    lower_local.mask[static_cast<std::size_t>(lx)] = 1;
  }
  std::sort(lower_local.members.begin(), lower_local.members.end());
  QuotientResult q = quotient(ug, lower_local);

  // every subgroup of the section, by closing each known subgroup with one
  // outside element until nothing new appears
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  seen.insert({0});
  work.push_back({0});
  for (std::size_t idx = 0; idx < work.size(); ++idx) {
    std::vector<int> base = work[idx];
    for (int x = 1; x < q.group.order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<int> gens = base;
      gens.push_back(x);
      Subgroup s = subgroup_closure(q.group, gens);
      if (seen.insert(s.members).second) {
        if (seen.size() > cap) throw std::runtime_error("subgroups_between: lattice exceeds cap");
        work.push_back(std::move(s.members));
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const std::vector<int>& s : seen) {
    std::vector<char> in_section(static_cast<std::size_t>(q.group.order()), 0);
    for (int x : s) in_section[static_cast<std::size_t>(x)] = 1;
    Subgroup n;
    n.mask.assign(static_cast<std::size_t>(g.order()), 0);
    for (int lx = 0; lx < ug.order(); ++lx) {
      if (!in_section[static_cast<std::size_t>(q.projection[static_cast<std::size_t>(lx)])]) continue;
      int ge = umap[static_cast<std::size_t>(lx)];
      n.mask[static_cast<std::size_t>(ge)] = 1;
      n.members.push_back(ge);
    }
    std::sort(n.members.begin(), n.members.end());
    out.push_back(std::move(n));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return out;
}

Group subgroup_as_group(const Group& g, const Subgroup& h, std::vector<int>* index_map) {
  int m = h.size();
  if (h.members.empty() || h.members[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < m; ++i) local[static_cast<std::size_t>(h.members[static_cast<std::size_t>(i)])] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int p = g.mul(h.members[static_cast<std::size_t>(a)], h.members[static_cast<std::size_t>(b)]);
      int lp = local[static_cast<std::size_t>(p)];
      if (lp < 0) throw std::invalid_argument("member set is not closed under multiplication");
      table[static_cast<std::size_t>(a) * m + b] = lp;
    }
  if (index_map) *index_map = h.members;
  return Group::from_table(std::move(table));
}

Group direct_product(const Group& a, const Group& b) {
  int na = a.order(), nb = b.order();
  long n = static_cast<long>(na) * nb;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  auto idx = [nb](int x, int y) { return x * nb + y; };
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          table[static_cast<std::size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
              idx(a.mul(x1, x2), b.mul(y1, y2));
  return Group::from_table(std::move(table));
}

namespace {

// abelian p-group basis by depth-first search over candidate generators,
// largest orders first, requiring trivial intersection with the span so far
bool extend_basis(const Group& g, const std::vector<int>& sylow,
                  Subgroup& span, std::vector<std::pair<int, long>>& basis,
                  std::size_t target) {
  if (static_cast<std::size_t>(span.size()) == target) return true;
  std::vector<std::pair<long, int>> cands;
  for (int x : sylow) {
    if (span.contains(x)) continue;
    cands.emplace_back(-static_cast<long>(g.element_order(x)), x);
  }
  std::sort(cands.begin(), cands.end());
  for (auto [negord, x] : cands) {
    long ord = -negord;
    // <x> must meet the span trivially
    bool clean = true;
    int y = x;
    while (y != 0) {
      if (span.contains(y)) { clean = false; break; }
      y = g.mul(y, x);
    }
    if (!clean) continue;
    std::vector<int> gens = span.members;
    gens.push_back(x);
    Subgroup bigger = subgroup_closure(g, gens);
    if (static_cast<std::size_t>(bigger.size()) != static_cast<std::size_t>(span.size()) * ord)
      continue;  // intersection nontrivial at a deeper level
    basis.emplace_back(x, ord);
    Subgroup saved = span;
    span = std::move(bigger);
    if (extend_basis(g, sylow, span, basis, target)) return true;
    span = std::move(saved);
    basis.pop_back();
  }
  return false;
}

} // namespace

std::vector<std::pair<int, long>> abelian_basis(const Group& g) {
  if (!g.is_abelian()) throw std::invalid_argument("abelian_basis: group is not abelian");
  std::vector<std::pair<int, long>> basis;
  if (g.order() == 1) return basis;
  for (auto [p, e] : factorize(static_cast<std::uint64_t>(g.order()))) {
    std::vector<int> sylow;
    for (int x = 0; x < g.order(); ++x) {
      long ord = g.element_order(x);
      if (ord == 1 || prime_power_base(static_cast<std::uint64_t>(ord)) == p) sylow.push_back(x);
    }
    std::size_t target = 1;
    for (int i = 0; i < e; ++i) target *= p;
    Subgroup span = trivial_subgroup(g);
    std::vector<std::pair<int, long>> part;
    if (!extend_basis(g, sylow, span, part, target))
      throw std::logic_error("abelian_basis: search failed");
    basis.insert(basis.end(), part.begin(), part.end());
  }
  return basis;
}

} // namespace qga
