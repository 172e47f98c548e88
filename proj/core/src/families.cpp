#include "qga/families.hpp"

#include "qga/numtheory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qga {

namespace {

Group cyclic_group(long m) {
  if (m < 1) throw std::invalid_argument("cyclic order must be >= 1");
  int n = static_cast<int>(m);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return Group::from_table(std::move(table));
}

Group dihedral_group(long order) {
  if (order < 2 || order % 2 != 0) throw std::invalid_argument("dihedral order must be even and >= 2");
  int m = static_cast<int>(order / 2);
  int n = static_cast<int>(order);
  // elements: i in [0, m) is r^i, m + i is s r^i
  auto id = [m](int flip, int rot) { return flip * m + rot; };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int f1 = 0; f1 < 2; ++f1)
    for (int r1 = 0; r1 < m; ++r1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int r2 = 0; r2 < m; ++r2) {
          // (s^f1 r^r1)(s^f2 r^r2) = s^{f1+f2} r^{r2 + (-1)^{f2} r1}
          int rot = f2 ? ((r2 - r1) % m + m) % m : (r1 + r2) % m;
          table[static_cast<std::size_t>(id(f1, r1)) * n + id(f2, r2)] = id((f1 + f2) % 2, rot);
        }
  return Group::from_table(std::move(table));
}

Group quaternion_group(long order) {
  // generalized quaternion of order 4m, restricted to 2-power orders >= 8
  if (order < 8 || (order & (order - 1)) != 0)
    throw std::invalid_argument("quaternion order must be a power of two >= 8");
  int m = static_cast<int>(order / 2);   // a has order 2m' with order = 4m', use a of order order/2
  int n = static_cast<int>(order);
  int half = m;                          // a^i for i in [0, half), b a^i for the rest
  auto id = [half](int flip, int rot) { return flip * half + rot; };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  int quarter = half / 2;  // a^{half/2} is the central involution b^2
  for (int f1 = 0; f1 < 2; ++f1)
    for (int r1 = 0; r1 < half; ++r1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int r2 = 0; r2 < half; ++r2) {
          int flip = (f1 + f2) % 2;
          int rot;
          if (f2 == 0) {
            rot = (r1 + r2) % half;
          } else {
            // (x a^{r1})(b a^{r2}) with b a^j b^{-1} = a^{-j}, b^2 = a^{quarter}
            rot = ((r2 - r1) % half + half) % half;
            if (f1 == 1) rot = (rot + quarter) % half;  // b a^{r1} b = a^{quarter - r1}
          }
          table[static_cast<std::size_t>(id(f1, r1)) * n + id(f2, r2)] = id(flip, rot);
        }
  return Group::from_table(std::move(table));
}

Group abelian_group(const std::vector<long>& factors) {
  if (factors.empty()) throw std::invalid_argument("abelian spec needs at least one factor");
  Group g = cyclic_group(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, cyclic_group(factors[i]));
  return g;
}

// Heisenberg-type group of order p^{1+2n}, exponent p (p odd): tuples
// (a_1..a_n, b_1..b_n, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a.b')
Group extraspecial_exponent_p(long p, long n) {
  long size = 1;
  for (long i = 0; i < 2 * n + 1; ++i) size *= p;
  int N = static_cast<int>(size);
  long pn = 1;
  for (long i = 0; i < n; ++i) pn *= p;
  // index = c + p*(a_0 + p*a_1 + ... ) + p^{n+1}*(b_0 + ...)
  auto decode = [&](int idx, std::vector<int>& a, std::vector<int>& b, int& c) {
    c = idx % static_cast<int>(p);
    idx /= static_cast<int>(p);
    for (long i = 0; i < n; ++i) { a[static_cast<std::size_t>(i)] = idx % static_cast<int>(p); idx /= static_cast<int>(p); }
    for (long i = 0; i < n; ++i) { b[static_cast<std::size_t>(i)] = idx % static_cast<int>(p); idx /= static_cast<int>(p); }
  };
  auto encode = [&](const std::vector<int>& a, const std::vector<int>& b, int c) {
    long idx = 0;
    for (long i = n - 1; i >= 0; --i) idx = idx * p + b[static_cast<std::size_t>(i)];
    for (long i = n - 1; i >= 0; --i) idx = idx * p + a[static_cast<std::size_t>(i)];
    idx = idx * p + c;
    return static_cast<int>(idx);
  };
  std::vector<int> table(static_cast<std::size_t>(N) * N);
  std::vector<int> a1(static_cast<std::size_t>(n)), b1(static_cast<std::size_t>(n));
  std::vector<int> a2(static_cast<std::size_t>(n)), b2(static_cast<std::size_t>(n));
  std::vector<int> a3(static_cast<std::size_t>(n)), b3(static_cast<std::size_t>(n));
  for (int x = 0; x < N; ++x) {
    int c1;
    decode(x, a1, b1, c1);
    for (int y = 0; y < N; ++y) {
      int c2;
      decode(y, a2, b2, c2);
      long dot = 0;
      for (long i = 0; i < n; ++i) dot += static_cast<long>(a1[static_cast<std::size_t>(i)]) * b2[static_cast<std::size_t>(i)];
      int c3 = static_cast<int>((c1 + c2 + dot) % p);
      for (long i = 0; i < n; ++i) {
        a3[static_cast<std::size_t>(i)] = (a1[static_cast<std::size_t>(i)] + a2[static_cast<std::size_t>(i)]) % static_cast<int>(p);
        b3[static_cast<std::size_t>(i)] = (b1[static_cast<std::size_t>(i)] + b2[static_cast<std::size_t>(i)]) % static_cast<int>(p);
      }
      table[static_cast<std::size_t>(x) * N + y] = encode(a3, b3, c3);
    }
  }
  return Group::from_table(std::move(table));
}

// order p^3, exponent p^2 (p odd): pairs (i mod p^2, j mod p) with
// (i,j)(i',j') = (i + i'(1+p)^j mod p^2, j + j' mod p)
Group extraspecial_p3_exponent_p2(long p) {
  long p2 = p * p;
  int N = static_cast<int>(p2 * p);
  std::vector<long> onep_pow(static_cast<std::size_t>(p));
  onep_pow[0] = 1;
  for (long j = 1; j < p; ++j) onep_pow[static_cast<std::size_t>(j)] = (onep_pow[static_cast<std::size_t>(j - 1)] * (1 + p)) % p2;
  auto encode = [&](long i, long j) { return static_cast<int>(i + p2 * j); };
  std::vector<int> table(static_cast<std::size_t>(N) * N);
  for (long i1 = 0; i1 < p2; ++i1)
    for (long j1 = 0; j1 < p; ++j1)
      for (long i2 = 0; i2 < p2; ++i2)
        for (long j2 = 0; j2 < p; ++j2) {
          long i3 = (i1 + i2 * onep_pow[static_cast<std::size_t>(j1)]) % p2;
          long j3 = (j1 + j2) % p;
          table[static_cast<std::size_t>(encode(i1, j1)) * N + encode(i2, j2)] = encode(i3, j3);
        }
  return Group::from_table(std::move(table));
}

Group extraspecial_group(long p, long n, const std::string& variant) {
  if (n < 1) throw std::invalid_argument("extraspecial: n must be >= 1");
  if (p == 2) {
    if (variant != "+" && variant != "-")
      throw std::invalid_argument("extraspecial p=2 variant must be + or -");
    Group d8 = dihedral_group(8);
    Group q8 = quaternion_group(8);
    Group g = (variant == "-") ? q8 : d8;
    for (long i = 1; i < n; ++i) g = central_product(g, d8);
    return g;
  }
  if (!is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("extraspecial: p must be prime");
  if (variant == "p" || variant.empty()) return extraspecial_exponent_p(p, n);
  if (variant == "p2") {
    Group g = extraspecial_p3_exponent_p2(p);
    if (n > 1) g = central_product(g, extraspecial_exponent_p(p, n - 1));
    return g;
  }
  throw std::invalid_argument("extraspecial odd-p variant must be p or p2");
}

} // namespace

Group central_product(const Group& a, const Group& b) {
  CharacteristicData da = characteristic_subgroups(a);
  CharacteristicData db = characteristic_subgroups(b);
  const Subgroup& za = da.center;
  const Subgroup& zb = db.center;
  if (za.size() != zb.size())
    throw std::invalid_argument("central product: centers have different orders");
  long zorder = za.size();
  auto generator_of = [zorder](const Group& g, const Subgroup& z) {
    for (int x : z.members) {
      if (g.element_order(x) == zorder) return x;
    }
    throw std::invalid_argument("central product: center is not cyclic");
  };
  int ga = generator_of(a, za);
  int gb = generator_of(b, zb);
  Group d = direct_product(a, b);
  // embed (ga, gb^{-1}) and quotient by the subgroup it generates
  int nb = b.order();
  int glue = ga * nb + b.inv(gb);
  Subgroup k = subgroup_closure(d, {glue});
  QuotientResult q = quotient(d, k);
  return q.group;
}

Group build_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::cyclic:
      return cyclic_group(spec.order);
    case Family::abelian:
      return abelian_group(spec.factors);
    case Family::elementary_abelian: {
      if (!is_prime(static_cast<std::uint64_t>(spec.p)))
        throw std::invalid_argument("elementary abelian: p must be prime");
      if (spec.n < 1) throw std::invalid_argument("elementary abelian: rank must be >= 1");
      std::vector<long> f(static_cast<std::size_t>(spec.n), spec.p);
      return abelian_group(f);
    }
    case Family::dihedral:
      return dihedral_group(spec.order);
    case Family::quaternion:
      return quaternion_group(spec.order);
    case Family::extraspecial:
      return extraspecial_group(spec.p, spec.n, spec.variant);
  }
  throw std::invalid_argument("unknown family");
}

FamilySpec parse_family_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("family spec needs name:params");
  std::string name = text.substr(0, colon);
  std::string params = text.substr(colon + 1);
  FamilySpec spec;
  auto parse_long = [](const std::string& s) {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number in family spec: " + s);
    return v;
  };
  if (name == "cyclic") {
    spec.family = Family::cyclic;
    spec.order = parse_long(params);
  } else if (name == "abelian") {
    spec.family = Family::abelian;
    std::stringstream ss(params);
    std::string tok;
    while (std::getline(ss, tok, ',')) spec.factors.push_back(parse_long(tok));
    if (spec.factors.empty()) throw std::invalid_argument("abelian spec needs factors");
  } else if (name == "elem") {
    spec.family = Family::elementary_abelian;
    auto caret = params.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("elem spec is p^rank");
    spec.p = parse_long(params.substr(0, caret));
    spec.n = parse_long(params.substr(caret + 1));
  } else if (name == "dihedral") {
    spec.family = Family::dihedral;
    spec.order = parse_long(params);
  } else if (name == "quaternion") {
    spec.family = Family::quaternion;
    spec.order = parse_long(params);
  } else if (name == "extraspecial") {
    spec.family = Family::extraspecial;
    std::stringstream ss(params);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("extraspecial params are key=value");
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "p") spec.p = parse_long(val);
      else if (key == "n") spec.n = parse_long(val);
      else if (key == "exp" || key == "type") spec.variant = val;
      else throw std::invalid_argument("unknown extraspecial key: " + key);
    }
    if (spec.p == 0 || spec.n == 0) throw std::invalid_argument("extraspecial needs p and n");
  } else {
    throw std::invalid_argument("unknown family: " + name);
  }
  return spec;
}

std::string family_spec_name(const FamilySpec& spec) {
  std::ostringstream os;
  switch (spec.family) {
    case Family::cyclic: os << "cyclic:" << spec.order; break;
    case Family::abelian: {
      os << "abelian:";
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i) os << ",";
        os << spec.factors[i];
      }
      break;
    }
    case Family::elementary_abelian: os << "elem:" << spec.p << "^" << spec.n; break;
    case Family::dihedral: os << "dihedral:" << spec.order; break;
    case Family::quaternion: os << "quaternion:" << spec.order; break;
    case Family::extraspecial:
      os << "extraspecial:p=" << spec.p << ",n=" << spec.n << ","
         << ((spec.p == 2) ? "type=" : "exp=") << spec.variant;
      break;
  }
  return os.str();
}

} // namespace qga
