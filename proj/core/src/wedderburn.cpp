#include "qga/wedderburn.hpp"

#include "qga/numtheory.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qga {

namespace {

long normalize_conductor(long d) {
  if (d < 1) throw std::invalid_argument("conductor must be positive");
  if (d % 2 == 0 && (d / 2) % 2 == 1) d /= 2;  // Q(zeta_d) = Q(zeta_{d/2}) for d = 2 mod 4
  return d;
}

long power_of(long p, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) r *= p;
  return r;
}

} // namespace

Integer SimpleComponent::dimension_each() const {
  Integer d = Integer(matrix_degree) * Integer(matrix_degree) *
              Integer(static_cast<long>(euler_phi(static_cast<std::uint64_t>(center_conductor))));
  if (division == DivisionKind::rational_quaternion) d *= 4;
  return d;
}

Integer SimpleComponent::dimension_total() const { return Integer(multiplicity) * dimension_each(); }

bool operator==(const SimpleComponent& a, const SimpleComponent& b) {
  return a.multiplicity == b.multiplicity && a.matrix_degree == b.matrix_degree &&
         a.center_conductor == b.center_conductor && a.division == b.division;
}

Integer WedderburnDecomposition::total_dimension() const {
  Integer t = 0;
  for (const auto& c : components) t += c.dimension_total();
  return t;
}

WedderburnDecomposition canonical_decomposition(long group_order,
                                                std::vector<SimpleComponent> parts) {
  for (auto& c : parts) {
    if (c.multiplicity < 1 || c.matrix_degree < 1)
      throw std::invalid_argument("component multiplicity and degree must be positive");
    c.center_conductor = normalize_conductor(c.center_conductor);
    if (c.division == DivisionKind::rational_quaternion && c.center_conductor != 1)
      throw std::invalid_argument("quaternion components have center Q");
  }
  auto key_less = [](const SimpleComponent& a, const SimpleComponent& b) {
    if (a.center_conductor != b.center_conductor) return a.center_conductor < b.center_conductor;
    if (a.matrix_degree != b.matrix_degree) return a.matrix_degree < b.matrix_degree;
    if (a.division != b.division) return a.division < b.division;
    return a.multiplicity < b.multiplicity;
  };
  std::sort(parts.begin(), parts.end(), key_less);
  std::vector<SimpleComponent> merged;
  for (const auto& c : parts) {
    if (!merged.empty() && merged.back().center_conductor == c.center_conductor &&
        merged.back().matrix_degree == c.matrix_degree && merged.back().division == c.division) {
      merged.back().multiplicity += c.multiplicity;
    } else {
      merged.push_back(c);
    }
  }
  WedderburnDecomposition out;
  out.group_order = group_order;
  out.components = std::move(merged);
  return out;
}

bool operator==(const WedderburnDecomposition& a, const WedderburnDecomposition& b) {
  return a.group_order == b.group_order && a.components == b.components;
}

WedderburnDecomposition decompose_abelian(const Group& g) {
  AbelianInvariants inv = abelian_invariants(g);
  std::vector<SimpleComponent> parts;
  for (const auto& [d, count] : inv.count_of_order) {
    if (count == 0) continue;
    long phi = static_cast<long>(euler_phi(static_cast<std::uint64_t>(d)));
    if (count % phi != 0) throw std::runtime_error("element order count not divisible by phi");
    SimpleComponent c;
    c.multiplicity = count / phi;
    c.matrix_degree = 1;
    c.center_conductor = d;
    parts.push_back(c);
  }
  return canonical_decomposition(g.order(), std::move(parts));
}

long quaternion_count(const Group& g) {
  CharacteristicData cd = characteristic_subgroups(g);
  const Subgroup& z = cd.center;
  if (z.size() % 2 != 0) return 0;

  std::vector<int> zmap;
  Group zg = subgroup_as_group(g, z, &zmap);
  std::vector<int> local_of(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < zmap.size(); ++i) local_of[static_cast<std::size_t>(zmap[i])] = static_cast<int>(i);

  // count squares landing in the center
  std::vector<long> sq_count(static_cast<std::size_t>(zg.order()), 0);
  for (int x = 0; x < g.order(); ++x) {
    int s = g.mul(x, x);
    int ls = local_of[static_cast<std::size_t>(s)];
    if (ls >= 0) ++sq_count[static_cast<std::size_t>(ls)];
  }

  long qdeg_sq = g.order() / z.size();
  std::uint64_t qdeg = 0;
  if (!perfect_square_root(static_cast<std::uint64_t>(qdeg_sq), qdeg))
    throw std::invalid_argument("quaternion_count: |G/Z| is not a perfect square");

  // derived subgroup members inside the center, in local coordinates
  std::vector<int> derived_local;
  for (int x : cd.derived.members) {
    int lx = local_of[static_cast<std::size_t>(x)];
    if (lx < 0) throw std::invalid_argument("quaternion_count: G' not contained in the center");
    derived_local.push_back(lx);
  }

  auto basis = abelian_basis(zg);
  long nb = static_cast<long>(basis.size());
  long bigd = 1;
  for (auto [e, o] : basis) bigd = std::lcm(bigd, o);

  // exponent tuple of every central element with respect to the basis
  std::vector<std::vector<long>> expo(static_cast<std::size_t>(zg.order()));
  {
    std::vector<long> tuple(static_cast<std::size_t>(nb), 0);
    for (;;) {
      int el = 0;
      for (long i = 0; i < nb; ++i)
        el = zg.mul(el, zg.power(basis[static_cast<std::size_t>(i)].first, tuple[static_cast<std::size_t>(i)]));
      expo[static_cast<std::size_t>(el)] = tuple;
      long i = 0;
      for (; i < nb; ++i) {
        if (++tuple[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(i)].second) break;
        tuple[static_cast<std::size_t>(i)] = 0;
      }
      if (i == nb) break;
    }
  }

  long k = 0;
  // characters of the center indexed by coefficient tuples
  std::vector<long> coef(static_cast<std::size_t>(nb), 0);
  for (;;) {
    // mu(z) = zeta_bigd^{sum_i coef_i * expo_i(z) * (bigd / d_i)}
    auto mu_exp = [&](int zel) {
      long e = 0;
      for (long i = 0; i < nb; ++i) {
        long di = basis[static_cast<std::size_t>(i)].second;
        e += coef[static_cast<std::size_t>(i)] * expo[static_cast<std::size_t>(zel)][static_cast<std::size_t>(i)] * (bigd / di);
      }
      return ((e % bigd) + bigd) % bigd;
    };
    // skip characters trivial on G'
    bool trivial_on_derived = true;
    for (int dl : derived_local) {
      if (mu_exp(dl) != 0) { trivial_on_derived = false; break; }
    }
    if (!trivial_on_derived) {
      long mu_order = 1;
      for (long i = 0; i < nb; ++i) {
        long di = basis[static_cast<std::size_t>(i)].second;
        long c = coef[static_cast<std::size_t>(i)] % di;
        mu_order = std::lcm(mu_order, di / std::gcd(di, c == 0 ? di : c));
      }
      Cyclotomic nu_sum;
      for (int zel = 0; zel < zg.order(); ++zel) {
        if (sq_count[static_cast<std::size_t>(zel)] == 0) continue;
        nu_sum += Cyclotomic::zeta(bigd, mu_exp(zel)) * make_rational(sq_count[static_cast<std::size_t>(zel)]);
      }
      Cyclotomic flat = nu_sum.minimized();
      if (!flat.is_rational())
        throw std::runtime_error("quaternion_count: indicator sum is irrational");
      Rational nu = flat.rational_value() * make_rational(static_cast<long>(qdeg), g.order());
      if (nu == make_rational(-1)) {
        if (mu_order != 2)
          throw std::runtime_error("quaternion_count: negative indicator at a character of order != 2");
        ++k;
      } else if (!(nu == make_rational(1) || sgn(nu) == 0)) {
        throw std::runtime_error("quaternion_count: indicator is not -1, 0, or 1");
      }
    }
    long i = 0;
    for (; i < nb; ++i) {
      if (++coef[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(i)].second) break;
      coef[static_cast<std::size_t>(i)] = 0;
    }
    if (i == nb) break;
  }
  return k;
}

WedderburnDecomposition decompose_vz(const Group& g) {
  if (g.is_abelian()) throw std::invalid_argument("decompose_vz: group is abelian");
  CharacteristicData cd = characteristic_subgroups(g);
  if (!is_subgroup_subset(cd.derived, cd.center))
    throw std::invalid_argument("decompose_vz: G' is not central");
  // centralizer test for the vanishing-off-center property
  {
    long expect = g.order() / cd.derived.size();
    for (int x = 0; x < g.order(); ++x) {
      if (cd.center.contains(x)) continue;
      long cent = 0;
      for (int y = 0; y < g.order(); ++y)
        if (g.mul(x, y) == g.mul(y, x)) ++cent;
      if (cent != expect)
        throw std::invalid_argument("decompose_vz: noncentral centralizer orders vary");
    }
  }
  std::uint64_t q = 0;
  if (!perfect_square_root(static_cast<std::uint64_t>(g.order() / cd.center.size()), q))
    throw std::invalid_argument("decompose_vz: |G/Z| is not a perfect square");
  long qdeg = static_cast<long>(q);

  // linear part: the group algebra of G/G'
  QuotientResult ab = quotient(g, cd.derived);
  WedderburnDecomposition linear = decompose_abelian(ab.group);
  std::vector<SimpleComponent> parts = linear.components;

  // nonlinear part: Galois classes of central characters not trivial on G'
  Group zg = subgroup_as_group(g, cd.center, nullptr);
  AbelianInvariants z_inv = abelian_invariants(zg);

  std::vector<int> derived_local;
  {
    std::vector<int> zmap;
    Group zg2 = subgroup_as_group(g, cd.center, &zmap);
    std::vector<int> local_of(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < zmap.size(); ++i) local_of[static_cast<std::size_t>(zmap[i])] = static_cast<int>(i);
    for (int x : cd.derived.members) derived_local.push_back(local_of[static_cast<std::size_t>(x)]);
    Subgroup dsub;
    dsub.mask.assign(static_cast<std::size_t>(zg2.order()), 0);
    for (int lx : derived_local) dsub.mask[static_cast<std::size_t>(lx)] = 1;
    std::sort(derived_local.begin(), derived_local.end());
    dsub.members = derived_local;
    AbelianInvariants zq_inv = abelian_invariants(quotient(zg2, dsub).group);

    long k_used = -1;
    for (const auto& [d, count] : z_inv.count_of_order) {
      if (d == 1) continue;
      long phi = static_cast<long>(euler_phi(static_cast<std::uint64_t>(d)));
      long a_z = count / phi;
      long a_zq = 0;
      auto it = zq_inv.count_of_order.find(d);
      if (it != zq_inv.count_of_order.end()) a_zq = it->second / phi;
      long cnt = a_z - a_zq;
      if (cnt < 0) throw std::runtime_error("decompose_vz: negative class count");
      if (cnt == 0) continue;
      if (d == 2) {
        if (k_used < 0) k_used = quaternion_count(g);
        if (k_used > cnt) throw std::runtime_error("decompose_vz: quaternion count exceeds class count");
        if (k_used > 0) {
          if (qdeg % 2 != 0) throw std::runtime_error("decompose_vz: odd degree with quaternionic part");
          SimpleComponent h;
          h.multiplicity = k_used;
          h.matrix_degree = qdeg / 2;
          h.center_conductor = 1;
          h.division = DivisionKind::rational_quaternion;
          parts.push_back(h);
        }
        if (cnt - k_used > 0) {
          SimpleComponent c;
          c.multiplicity = cnt - k_used;
          c.matrix_degree = qdeg;
          c.center_conductor = 1;
          parts.push_back(c);
        }
      } else {
        SimpleComponent c;
        c.multiplicity = cnt;
        c.matrix_degree = qdeg;
        c.center_conductor = d;
        parts.push_back(c);
      }
    }
  }
  WedderburnDecomposition out = canonical_decomposition(g.order(), std::move(parts));
  if (out.total_dimension() != Integer(g.order()))
    throw std::runtime_error("decompose_vz: dimensions do not sum to |G|");
  return out;
}

WedderburnDecomposition decompose_camina_class3_params(long p, long n, long z) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("class-3 parameters need an odd prime p");
  if (n < 1 || n % 2 != 0) throw std::invalid_argument("class-3 parameters need even n");
  if (z < 1) throw std::invalid_argument("class-3 parameters need z >= 1");
  std::vector<SimpleComponent> parts;
  SimpleComponent triv;
  parts.push_back(triv);  // Q
  SimpleComponent lin;
  lin.multiplicity = (power_of(p, 2 * n) - 1) / (p - 1);
  lin.center_conductor = p;
  parts.push_back(lin);
  SimpleComponent mid;
  mid.multiplicity = (power_of(p, n) - 1) / (p - 1);
  mid.matrix_degree = power_of(p, n);
  mid.center_conductor = p;
  parts.push_back(mid);
  SimpleComponent big;
  big.multiplicity = (power_of(p, z) - 1) / (p - 1);
  big.matrix_degree = power_of(p, (3 * n) / 2);
  big.center_conductor = p;
  parts.push_back(big);
  long order = power_of(p, 3 * n + z);
  WedderburnDecomposition out = canonical_decomposition(order, std::move(parts));
  if (out.total_dimension() != Integer(order))
    throw std::runtime_error("class-3 components do not sum to the group order");
  return out;
}

WedderburnDecomposition decompose_camina(const Group& g) { return decompose_camina(g, camina_profile(g)); }

WedderburnDecomposition decompose_camina(const Group& g, const CaminaProfile& prof) {
  if (g.is_abelian()) return decompose_abelian(g);
  if (!prof.is_camina_group)
    throw std::invalid_argument("decompose_camina: (G, G') is not a Camina pair");
  if (!prof.is_p_group)
    throw std::invalid_argument("decompose_camina: group is not a p-group");
  long p = prof.p;
  if (prof.nilpotency_class == 2) {
    if (!(prof.derived == prof.center))
      throw std::runtime_error("decompose_camina: class-2 group with G' != Z");
    long zsize = prof.center.size();
    long quot = g.order() / zsize;
    std::uint64_t q = 0;
    if (!perfect_square_root(static_cast<std::uint64_t>(quot), q))
      throw std::runtime_error("decompose_camina: |G/Z| is not a perfect square");
    long qdeg = static_cast<long>(q);
    std::vector<SimpleComponent> parts;
    if (p % 2 == 1) {
      SimpleComponent triv;
      parts.push_back(triv);
      SimpleComponent lin;
      lin.multiplicity = (quot - 1) / (p - 1);
      lin.center_conductor = p;
      parts.push_back(lin);
      SimpleComponent nl;
      nl.multiplicity = (zsize - 1) / (p - 1);
      nl.matrix_degree = qdeg;
      nl.center_conductor = p;
      parts.push_back(nl);
    } else {
      long k = quaternion_count(g);
      if (k > zsize - 1) throw std::runtime_error("decompose_camina: quaternion count too large");
      SimpleComponent triv;
      triv.multiplicity = quot;
      parts.push_back(triv);
      if (k > 0) {
        if (qdeg % 2 != 0) throw std::runtime_error("decompose_camina: odd degree with quaternionic part");
        SimpleComponent h;
        h.multiplicity = k;
        h.matrix_degree = qdeg / 2;
        h.division = DivisionKind::rational_quaternion;
        parts.push_back(h);
      }
      if (zsize - 1 - k > 0) {
        SimpleComponent nl;
        nl.multiplicity = zsize - 1 - k;
        nl.matrix_degree = qdeg;
        parts.push_back(nl);
      }
    }
    WedderburnDecomposition out = canonical_decomposition(g.order(), std::move(parts));
    if (out.total_dimension() != Integer(g.order()))
      throw std::runtime_error("decompose_camina: dimensions do not sum to |G|");
    return out;
  }
  if (prof.nilpotency_class == 3) {
    if (p == 2) throw std::invalid_argument("decompose_camina: class-3 with p = 2 is not covered");
    long dq = g.order() / prof.derived.size();   // |G/G'| = p^{2n}
    long mid = prof.derived.size() / prof.center.size();  // |G'/Z| = p^n
    long n2 = 0, n1 = 0;
    while (dq % p == 0) { dq /= p; ++n2; }
    if (dq != 1) throw std::runtime_error("decompose_camina: |G/G'| is not a p-power");
    long midc = mid;
    while (midc % p == 0) { midc /= p; ++n1; }
    if (midc != 1) throw std::runtime_error("decompose_camina: |G'/Z| is not a p-power");
    if (n2 != 2 * n1) throw std::runtime_error("decompose_camina: |G/G'| != |G'/Z|^2");
    long zsize = prof.center.size();
    long zc = zsize, zexp = 0;
    while (zc % p == 0) { zc /= p; ++zexp; }
    if (zc != 1) throw std::runtime_error("decompose_camina: |Z| is not a p-power");
    return decompose_camina_class3_params(p, n1, zexp);
  }
  throw std::invalid_argument("decompose_camina: nilpotency class is not 2 or 3");
}

int schur_index_policy(const Group& g, const GaloisClass& cls) {
  long d = cls.field_conductor;
  long phi = static_cast<long>(euler_phi(static_cast<std::uint64_t>(d)));
  if (static_cast<long>(cls.members.size()) != phi)
    throw std::invalid_argument(
        "character field is a proper subfield of its cyclotomic closure; not supported");
  if (g.is_abelian()) return 1;
  long order = g.order();
  if (order % 2 == 1) return 1;
  std::uint64_t p = prime_power_base(static_cast<std::uint64_t>(order));
  if (p != 0 && p % 2 == 1) return 1;
  if (p == 2) {
    if (cls.fs_indicator == -1) {
      if (d != 1)
        throw std::runtime_error("negative indicator with irrational character values");
      return 2;
    }
    return 1;
  }
  throw std::invalid_argument("Schur index policy covers only abelian, odd-order, and p-groups");
}

WedderburnDecomposition decompose_oracle(const Group& g) {
  return decompose_oracle(dixon_character_table(g));
}

WedderburnDecomposition decompose_oracle(const CharacterTable& t) {
  std::vector<GaloisClass> classes = galois_partition(t);
  std::vector<SimpleComponent> parts;
  for (const GaloisClass& cls : classes) {
    int m = schur_index_policy(t.group, cls);
    SimpleComponent c;
    c.multiplicity = 1;
    c.center_conductor = cls.field_conductor;
    if (m == 1) {
      c.matrix_degree = cls.degree;
      c.division = DivisionKind::field;
    } else {
      if (cls.degree % 2 != 0)
        throw std::runtime_error("odd degree with Schur index 2");
      c.matrix_degree = cls.degree / 2;
      c.division = DivisionKind::rational_quaternion;
    }
    parts.push_back(c);
  }
  WedderburnDecomposition out = canonical_decomposition(t.group.order(), std::move(parts));
  if (out.total_dimension() != Integer(t.group.order()))
    throw std::runtime_error("oracle decomposition dimensions do not sum to |G|");
  return out;
}

DecompositionReport verify_decomposition(const WedderburnDecomposition& formula,
                                         const WedderburnDecomposition& oracle) {
  DecompositionReport rep;
  rep.dimensions_ok = formula.total_dimension() == Integer(formula.group_order) &&
                      oracle.total_dimension() == Integer(oracle.group_order) &&
                      formula.group_order == oracle.group_order;
  rep.match = (formula == oracle);
  if (!rep.match) {
    auto describe = [](const SimpleComponent& c) {
      std::ostringstream os;
      os << c.multiplicity << " x M_" << c.matrix_degree;
      if (c.division == DivisionKind::rational_quaternion) os << "(H(Q))";
      else if (c.center_conductor == 1) os << "(Q)";
      else os << "(Q(zeta_" << c.center_conductor << "))";
      return os.str();
    };
    for (const auto& c : formula.components) {
      bool found = std::any_of(oracle.components.begin(), oracle.components.end(),
                               [&](const SimpleComponent& o) { return o == c; });
      if (!found) rep.notes.push_back("formula only: " + describe(c));
    }
    for (const auto& c : oracle.components) {
      bool found = std::any_of(formula.components.begin(), formula.components.end(),
                               [&](const SimpleComponent& o) { return o == c; });
      if (!found) rep.notes.push_back("oracle only: " + describe(c));
    }
  }
  return rep;
}

std::string decomposition_to_json(const WedderburnDecomposition& d) {
  nlohmann::json doc;
  doc["group_order"] = d.group_order;
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : d.components) {
    nlohmann::json jc;
    jc["multiplicity"] = c.multiplicity;
    jc["degree"] = c.matrix_degree;
    jc["center_conductor"] = c.center_conductor;
    jc["division"] = (c.division == DivisionKind::rational_quaternion) ? "rational_quaternion" : "field";
    comps.push_back(std::move(jc));
  }
  doc["components"] = std::move(comps);
  return doc.dump();
}

std::string decomposition_pretty(const WedderburnDecomposition& d) {
  std::ostringstream os;
  os << "QG for |G| = " << d.group_order << ":\n";
  for (const auto& c : d.components) {
    os << "  " << c.multiplicity << " x ";
    if (c.matrix_degree > 1) os << "M_" << c.matrix_degree << "(";
    if (c.division == DivisionKind::rational_quaternion) os << "H(Q)";
    else if (c.center_conductor == 1) os << "Q";
    else os << "Q(zeta_" << c.center_conductor << ")";
    if (c.matrix_degree > 1) os << ")";
    os << "   [dim " << to_string(c.dimension_total()) << "]\n";
  }
  os << "  total dimension " << to_string(d.total_dimension()) << "\n";
  return os.str();
}

} // namespace qga
