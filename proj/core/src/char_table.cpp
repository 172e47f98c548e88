#include "qga/char_table.hpp"

#include "qga/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qga {

namespace {

using u64 = std::uint64_t;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return (static_cast<__uint128_t>(a) * b) % p; }
  u64 inv(u64 a) const { return inv_mod(a, p); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
};

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// basis vectors kept fully reduced: basis[v][pivot[u]] == (u == v)
struct Subspace {
  std::vector<Vec> basis;
  std::vector<std::size_t> pivots;
};

void echelonize_insert(const Fp& F, Subspace& s, Vec v) {
  for (std::size_t u = 0; u < s.basis.size(); ++u) {
    u64 c = v[s.pivots[u]];
    if (c != 0) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(v[i], F.mul(c, s.basis[u][i]));
    }
  }
  std::size_t piv = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) { piv = i; break; }
  }
  if (piv == v.size()) return;  // dependent
  u64 inv = F.inv(v[piv]);
  for (auto& x : v) x = F.mul(x, inv);
  for (std::size_t u = 0; u < s.basis.size(); ++u) {
    u64 c = s.basis[u][piv];
    if (c != 0) {
      for (std::size_t i = 0; i < v.size(); ++i)
        s.basis[u][i] = F.sub(s.basis[u][i], F.mul(c, v[i]));
    }
  }
  s.basis.push_back(std::move(v));
  s.pivots.push_back(piv);
}

// coordinates of u in the subspace; throws if u is outside
Vec coordinates(const Fp& F, const Subspace& s, Vec u) {
  Vec alpha(s.basis.size());
  for (std::size_t v = 0; v < s.basis.size(); ++v) {
    alpha[v] = u[s.pivots[v]];
    if (alpha[v] != 0) {
      for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = F.sub(u[i], F.mul(alpha[v], s.basis[v][i]));
    }
  }
  for (u64 x : u) {
    if (x != 0) throw std::runtime_error("class matrix does not stabilize the subspace");
  }
  return alpha;
}

// characteristic polynomial, ascending coefficients, by the trace recursion
Vec charpoly(const Fp& F, const Mat& a) {
  std::size_t d = a.size();
  std::vector<u64> c(d + 1);
  c[d] = 1;
  Mat b(d, Vec(d));  // B_0 = I
  for (std::size_t i = 0; i < d; ++i) b[i][i] = 1;
  for (std::size_t m = 1; m <= d; ++m) {
    // AB = a * b
    Mat ab(d, Vec(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        u64 aik = a[i][k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < d; ++j) ab[i][j] = F.add(ab[i][j], F.mul(aik, b[k][j]));
      }
    u64 tr = 0;
    for (std::size_t i = 0; i < d; ++i) tr = F.add(tr, ab[i][i]);
    u64 cm = F.mul(tr, F.inv(m % F.p));
    cm = F.neg(cm);
    c[d - m] = cm;
    b = std::move(ab);
    for (std::size_t i = 0; i < d; ++i) b[i][i] = F.add(b[i][i], cm);
  }
  return c;
}

u64 poly_eval(const Fp& F, const Vec& c, u64 x) {
  u64 r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = F.add(F.mul(r, x), c[i]);
  return r;
}

// kernel basis of (a - lambda I)
std::vector<Vec> eigen_kernel(const Fp& F, Mat a, u64 lambda) {
  std::size_t d = a.size();
  for (std::size_t i = 0; i < d; ++i) a[i][i] = F.sub(a[i][i], lambda);
  // gauss to reduced form, track pivot columns
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < d; ++col) {
    std::size_t sel = rank;
    while (sel < d && a[sel][col] == 0) ++sel;
    if (sel == d) continue;
    std::swap(a[sel], a[rank]);
    u64 inv = F.inv(a[rank][col]);
    for (std::size_t j = 0; j < d; ++j) a[rank][j] = F.mul(a[rank][j], inv);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == rank) continue;
      u64 f = a[r][col];
      if (f == 0) continue;
      for (std::size_t j = 0; j < d; ++j) a[r][j] = F.sub(a[r][j], F.mul(f, a[rank][j]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<char> is_pivot(d, 0);
  for (std::size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<Vec> kernel;
  for (std::size_t free_col = 0; free_col < d; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(d);
    v[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = F.neg(a[r][free_col]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

} // namespace

std::vector<std::vector<std::vector<long>>> class_mult_table(const Group& g) {
  ConjugacyPartition part = conjugacy_classes(g);
  std::size_t k = part.classes.size();
  std::vector<std::vector<std::vector<long>>> a(
      k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
  for (std::size_t kk = 0; kk < k; ++kk) {
    int target = part.representatives[kk];
    for (int x = 0; x < g.order(); ++x) {
      int i = part.class_of[static_cast<std::size_t>(x)];
      int j = part.class_of[static_cast<std::size_t>(g.mul(g.inv(x), target))];
      ++a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][kk];
    }
  }
  return a;
}

CharacterTable dixon_character_table(const Group& g) {
  CharacterTable t;
  t.group = g;
  t.classes = conjugacy_classes(g);
  std::size_t k = t.classes.classes.size();
  t.class_sizes.resize(k);
  for (std::size_t i = 0; i < k; ++i) t.class_sizes[i] = static_cast<int>(t.classes.classes[i].size());
  t.inverse_class.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    t.inverse_class[i] = t.classes.class_of[static_cast<std::size_t>(g.inv(t.classes.representatives[i]))];
  long e = g.exponent();
  t.exponent = e;
  u64 ell = find_split_prime(static_cast<u64>(e), 2ull * static_cast<u64>(g.order()));
  if (ell > (1ull << 40)) throw std::runtime_error("working prime unexpectedly large");
  t.modulus = ell;
  Fp F{ell};

  auto amat = class_mult_table(g);
  auto class_matrix = [&](std::size_t i) {
    Mat m(k, Vec(k));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t kk = 0; kk < k; ++kk)
        m[j][kk] = static_cast<u64>(amat[i][j][kk] % static_cast<long>(ell));
    return m;
  };

  // refine the common eigenspaces of all class-sum matrices
  std::vector<Subspace> spaces;
  {
    Subspace all;
    for (std::size_t i = 0; i < k; ++i) {
      Vec v(k);
      v[i] = 1;
      echelonize_insert(F, all, std::move(v));
    }
    spaces.push_back(std::move(all));
  }
  for (std::size_t i = 1; i < k; ++i) {
    bool any_big = std::any_of(spaces.begin(), spaces.end(),
                               [](const Subspace& s) { return s.basis.size() > 1; });
    if (!any_big) break;
    Mat m = class_matrix(i);
    std::vector<Subspace> next;
    for (Subspace& s : spaces) {
      std::size_t d = s.basis.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // restriction of m to the subspace: column v holds the coordinates of
      // m * basis[v]
      Mat a(d, Vec(d));
      for (std::size_t v = 0; v < d; ++v) {
        Vec u(k);
        for (std::size_t r = 0; r < k; ++r) {
          u64 acc = 0;
          for (std::size_t c = 0; c < k; ++c) {
            if (m[r][c] && s.basis[v][c]) acc = F.add(acc, F.mul(m[r][c], s.basis[v][c]));
          }
          u[r] = acc;
        }
        Vec alpha = coordinates(F, s, std::move(u));
        for (std::size_t row = 0; row < d; ++row) a[row][v] = alpha[row];
      }
      Vec cp = charpoly(F, a);
      std::size_t split_total = 0;
      for (u64 lam = 0; lam < ell; ++lam) {
        if (poly_eval(F, cp, lam) != 0) continue;
        std::vector<Vec> ker = eigen_kernel(F, a, lam);
        if (ker.empty()) continue;
        Subspace sub;
        for (Vec& coeff : ker) {
          Vec w(k);
          for (std::size_t v = 0; v < d; ++v) {
            if (coeff[v] == 0) continue;
            for (std::size_t idx = 0; idx < k; ++idx)
              w[idx] = F.add(w[idx], F.mul(coeff[v], s.basis[v][idx]));
          }
          echelonize_insert(F, sub, std::move(w));
        }
        split_total += sub.basis.size();
        next.push_back(std::move(sub));
      }
      if (split_total != d) throw std::runtime_error("eigenspace refinement lost dimension");
    }
    spaces = std::move(next);
  }
  for (const Subspace& s : spaces) {
    if (s.basis.size() != 1) throw std::runtime_error("class matrices failed to separate characters");
  }
  if (spaces.size() != k) throw std::runtime_error("wrong number of one-dimensional eigenspaces");

  // degrees and modular character values
  u64 order_mod = static_cast<u64>(g.order()) % ell;
  std::vector<u64> inv_size(k);
  for (std::size_t j = 0; j < k; ++j) inv_size[j] = F.inv(static_cast<u64>(t.class_sizes[j]) % ell);

  long root_bound = 1;
  while ((root_bound + 1) * (root_bound + 1) <= g.order()) ++root_bound;

  u64 z = pow_mod(primitive_root(ell), (ell - 1) / static_cast<u64>(e), ell);
  std::vector<u64> zpow(static_cast<std::size_t>(e));
  zpow[0] = 1;
  for (long s = 1; s < e; ++s) zpow[static_cast<std::size_t>(s)] = F.mul(zpow[static_cast<std::size_t>(s - 1)], z);
  u64 inv_e = F.inv(static_cast<u64>(e) % ell);

  // class of rep^t for each class
  std::vector<std::vector<int>> pow_class(k, std::vector<int>(static_cast<std::size_t>(e)));
  for (std::size_t j = 0; j < k; ++j) {
    int rep = t.classes.representatives[j];
    int cur = 0;
    for (long s = 0; s < e; ++s) {
      pow_class[j][static_cast<std::size_t>(s)] = t.classes.class_of[static_cast<std::size_t>(cur)];
      cur = g.mul(cur, rep);
    }
  }

  for (const Subspace& s : spaces) {
    const Vec& raw = s.basis[0];
    if (raw[0] == 0) throw std::runtime_error("eigenvector vanishes on the identity class");
    u64 norm = F.inv(raw[0]);
    Vec w(k);
    for (std::size_t j = 0; j < k; ++j) w[j] = F.mul(raw[j], norm);

    u64 tsum = 0;
    for (std::size_t j = 0; j < k; ++j)
      tsum = F.add(tsum, F.mul(F.mul(w[j], w[static_cast<std::size_t>(t.inverse_class[j])]), inv_size[j]));
    if (tsum == 0) throw std::runtime_error("degree equation degenerate");
    u64 deg_sq = F.mul(order_mod, F.inv(tsum));
    long degree = 0;
    for (long d = 1; d <= root_bound; ++d) {
      if (F.mul(static_cast<u64>(d), static_cast<u64>(d)) == deg_sq) { degree = d; break; }
    }
    if (degree == 0) throw std::runtime_error("character degree is not a small integer");

    std::vector<u64> theta(k);
    for (std::size_t j = 0; j < k; ++j)
      theta[j] = F.mul(F.mul(static_cast<u64>(degree) % ell, w[j]), inv_size[j]);

    Character chi;
    chi.degree = static_cast<int>(degree);
    chi.values.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      std::map<long, Rational> terms;
      long total = 0;
      for (long sexp = 0; sexp < e; ++sexp) {
        u64 acc = 0;
        for (long tt = 0; tt < e; ++tt) {
          u64 th = theta[static_cast<std::size_t>(pow_class[j][static_cast<std::size_t>(tt)])];
          // z^{-s t} = zpow[(e - (s*t) % e) % e]
          long st = static_cast<long>((static_cast<long long>(sexp) * tt) % e);
          u64 zn = zpow[static_cast<std::size_t>((e - st) % e)];
          acc = F.add(acc, F.mul(th, zn));
        }
        u64 m = F.mul(acc, inv_e);
        if (m > static_cast<u64>(degree))
          throw std::runtime_error("root-of-unity multiplicity exceeds the degree");
        if (m != 0) {
          terms[sexp] = make_rational(static_cast<long>(m));
          total += static_cast<long>(m);
        }
      }
      if (total != degree) throw std::runtime_error("root-of-unity multiplicities do not sum to the degree");
      Cyclotomic val = Cyclotomic::reduce(e, terms).minimized();
      for (const Rational& c : val.coords()) {
        if (c.get_den() != 1) throw std::runtime_error("character value is not an algebraic integer");
      }
      chi.values.push_back(std::move(val));
    }
    chi.conductor = field_conductor(chi.values);
    t.chars.push_back(std::move(chi));
  }

  std::sort(t.chars.begin(), t.chars.end(), [](const Character& a, const Character& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.conductor != b.conductor) return a.conductor < b.conductor;
    for (std::size_t j = 0; j < a.values.size(); ++j) {
      int c = Cyclotomic::compare(a.values[j], b.values[j]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return t;
}

CharacterInvariants character_invariants(const CharacterTable& t, int char_index) {
  const Character& chi = t.chars.at(static_cast<std::size_t>(char_index));
  const Group& g = t.group;
  CharacterInvariants out;
  out.conductor = chi.conductor;

  // kernel: classes where the value equals the degree
  Cyclotomic deg_value(make_rational(chi.degree));
  std::vector<char> mask(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> members;
  for (std::size_t j = 0; j < chi.values.size(); ++j) {
    if (chi.values[j] == deg_value) {
      for (int x : t.classes.classes[j]) mask[static_cast<std::size_t>(x)] = 1;
    }
  }
  for (int x = 0; x < g.order(); ++x) {
    if (mask[static_cast<std::size_t>(x)]) members.push_back(x);
  }
  Subgroup ker;
  ker.members = std::move(members);
  ker.mask = std::move(mask);
  Subgroup closed = subgroup_closure(g, ker.members);
  if (!(closed == ker)) throw std::runtime_error("character kernel is not a subgroup");
  out.kernel = std::move(ker);

  // Frobenius-Schur indicator
  std::vector<long> sq_count(chi.values.size(), 0);
  for (int x = 0; x < g.order(); ++x)
    ++sq_count[static_cast<std::size_t>(t.classes.class_of[static_cast<std::size_t>(g.mul(x, x))])];
  Cyclotomic acc;
  for (std::size_t j = 0; j < chi.values.size(); ++j) {
    if (sq_count[j] != 0) acc += chi.values[j] * make_rational(sq_count[j]);
  }
  Cyclotomic flat = acc.minimized();
  if (!flat.is_rational()) throw std::runtime_error("squared-element character sum is irrational");
  Rational nu = flat.rational_value() / make_rational(g.order());
  if (nu == make_rational(1)) out.fs_indicator = 1;
  else if (nu == make_rational(-1)) out.fs_indicator = -1;
  else if (sgn(nu) == 0) out.fs_indicator = 0;
  else throw std::runtime_error("Frobenius-Schur indicator is not -1, 0, or 1");
  return out;
}

std::vector<GaloisClass> galois_partition(const CharacterTable& t) {
  std::size_t nchars = t.chars.size();
  // value-vector lookup
  std::map<std::vector<std::string>, int> by_values;
  auto key_of = [&](const std::vector<Cyclotomic>& vals) {
    std::vector<std::string> key;
    key.reserve(vals.size());
    for (const auto& v : vals) key.push_back(v.str());
    return key;
  };
  for (std::size_t i = 0; i < nchars; ++i) by_values.emplace(key_of(t.chars[i].values), static_cast<int>(i));

  std::vector<char> used(nchars, 0);
  std::vector<GaloisClass> out;
  for (std::size_t i = 0; i < nchars; ++i) {
    if (used[i]) continue;
    const Character& chi = t.chars[i];
    long d = chi.conductor;
    std::vector<int> orbit{static_cast<int>(i)};
    used[i] = 1;
    for (long a = 2; a < d; ++a) {
      if (std::gcd(a, d) != 1) continue;
      std::vector<Cyclotomic> mapped;
      mapped.reserve(chi.values.size());
      for (const auto& v : chi.values) mapped.push_back(v.lifted_to(d).galois(a).minimized());
      auto it = by_values.find(key_of(mapped));
      if (it == by_values.end()) throw std::runtime_error("Galois conjugate character missing from the table");
      if (!used[static_cast<std::size_t>(it->second)]) {
        used[static_cast<std::size_t>(it->second)] = 1;
        orbit.push_back(it->second);
      }
    }
    std::sort(orbit.begin(), orbit.end());

    GaloisClass cls;
    cls.members = orbit;
    cls.field_conductor = d;
    cls.degree = chi.degree;
    CharacterInvariants inv0 = character_invariants(t, orbit.front());
    cls.kernel = inv0.kernel;
    cls.fs_indicator = inv0.fs_indicator;
    for (std::size_t m = 1; m < orbit.size(); ++m) {
      CharacterInvariants invm = character_invariants(t, orbit[m]);
      if (!(invm.kernel == cls.kernel) || invm.fs_indicator != cls.fs_indicator ||
          t.chars[static_cast<std::size_t>(orbit[m])].degree != cls.degree ||
          t.chars[static_cast<std::size_t>(orbit[m])].conductor != d)
        throw std::runtime_error("Galois orbit members disagree on invariants");
    }
    cls.rational_character.reserve(t.classes.classes.size());
    for (std::size_t j = 0; j < t.classes.classes.size(); ++j) {
      Cyclotomic sum;
      for (int m : orbit) sum += t.chars[static_cast<std::size_t>(m)].values[j];
      Cyclotomic flat = sum.minimized();
      if (!flat.is_rational()) throw std::runtime_error("orbit sum is not rational");
      cls.rational_character.push_back(flat.rational_value());
    }
    out.push_back(std::move(cls));
  }
  return out;
}

void verify_character_table(const CharacterTable& t) {
  const Group& g = t.group;
  std::size_t k = t.classes.classes.size();
  if (t.chars.size() != k) throw std::runtime_error("character count differs from class count");
  Rational order = make_rational(g.order());

  // row orthogonality
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      Cyclotomic acc;
      for (std::size_t j = 0; j < k; ++j) {
        Cyclotomic term = t.chars[a].values[j] *
                          t.chars[b].values[static_cast<std::size_t>(t.inverse_class[j])];
        term *= make_rational(t.class_sizes[j]);
        acc += term;
      }
      Cyclotomic expect((a == b) ? order : Rational(0));
      if (!(acc == expect)) throw std::runtime_error("row orthogonality fails");
    }
  }
  // column orthogonality
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic acc;
      for (std::size_t a = 0; a < k; ++a)
        acc += t.chars[a].values[i] * t.chars[a].values[static_cast<std::size_t>(t.inverse_class[j])];
      Cyclotomic expect((i == j) ? make_rational(g.order(), t.class_sizes[i]) : Rational(0));
      if (!(acc == expect)) throw std::runtime_error("column orthogonality fails");
    }
  }
  // degree sum and linear character count
  long deg_sq = 0;
  long linear = 0;
  for (const Character& c : t.chars) {
    deg_sq += static_cast<long>(c.degree) * c.degree;
    if (c.degree == 1) ++linear;
  }
  if (deg_sq != g.order()) throw std::runtime_error("degree squares do not sum to the group order");
  CharacteristicData cd = characteristic_subgroups(g);
  if (linear * cd.derived.size() != g.order())
    throw std::runtime_error("linear character count differs from the abelianization order");
}

} // namespace qga
