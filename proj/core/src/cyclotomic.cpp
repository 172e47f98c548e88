#include "qga/cyclotomic.hpp"

#include "qga/numtheory.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qga {

namespace {

// per-conductor tables: minimal polynomial and reduction rows for zeta^j
struct CycContext {
  long n = 1;
  long phi = 1;
  std::vector<Integer> min_poly;                 // Phi_n, ascending, size phi+1
  std::vector<std::vector<Integer>> power_rows;  // zeta^j in power basis, j in [0, n)
  std::vector<long> units;                       // units mod n, ascending (for n == 1: {0})
};

// divide a by b exactly (integer polynomial division, b monic), returns quotient
std::vector<Integer> poly_divide_exact(std::vector<Integer> a, const std::vector<Integer>& b) {
  if (b.empty() || b.back() != 1) throw std::logic_error("poly_divide_exact: divisor not monic");
  long db = static_cast<long>(b.size()) - 1;
  long da = static_cast<long>(a.size()) - 1;
  if (da < db) throw std::logic_error("poly_divide_exact: degree underflow");
  std::vector<Integer> q(da - db + 1);
  for (long k = da - db; k >= 0; --k) {
    Integer c = a[k + db];
    q[k] = c;
    if (c != 0) {
      for (long i = 0; i <= db; ++i) a[k + i] -= c * b[i];
    }
  }
  for (const auto& r : a) {
    if (r != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
  }
  return q;
}

const CycContext& context(long n);

std::vector<Integer> compute_cyclotomic_poly(long n) {
  if (n == 1) return {Integer(-1), Integer(1)}; // x - 1
  // (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<Integer> num(static_cast<std::size_t>(n) + 1);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(n))) {
    if (static_cast<long>(d) == n) continue;
    num = poly_divide_exact(std::move(num), context(static_cast<long>(d)).min_poly);
  }
  return num;
}

CycContext build_context(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic conductor must be >= 1");
  CycContext c;
  c.n = n;
  c.phi = static_cast<long>(euler_phi(static_cast<std::uint64_t>(n)));
  c.min_poly = compute_cyclotomic_poly(n);
  if (static_cast<long>(c.min_poly.size()) != c.phi + 1)
    throw std::logic_error("cyclotomic polynomial degree mismatch");
  c.power_rows.assign(static_cast<std::size_t>(n), {});
  for (long j = 0; j < n; ++j) {
    std::vector<Integer> row(static_cast<std::size_t>(c.phi));
    if (j < c.phi) {
      row[static_cast<std::size_t>(j)] = 1;
    } else {
      // x * previous row, reduced mod Phi_n
      const auto& prev = c.power_rows[static_cast<std::size_t>(j - 1)];
      Integer lead = prev[static_cast<std::size_t>(c.phi - 1)];
      for (long i = c.phi - 1; i >= 1; --i) row[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
      row[0] = 0;
      if (lead != 0) {
        for (long i = 0; i < c.phi; ++i) row[static_cast<std::size_t>(i)] -= lead * c.min_poly[static_cast<std::size_t>(i)];
      }
    }
    c.power_rows[static_cast<std::size_t>(j)] = std::move(row);
  }
  if (n == 1) {
    c.units = {0};
  } else {
    for (long a = 1; a < n; ++a) {
      if (std::gcd(a, n) == 1) c.units.push_back(a);
    }
  }
  return c;
}

const CycContext& context(long n) {
  // recursive_mutex: building Phi_n walks contexts of proper divisors
  static std::unordered_map<long, CycContext> cache;
  static std::recursive_mutex mtx;
  std::lock_guard<std::recursive_mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_context(n)).first;
  return it->second;
}

// accumulate coeff * zeta^e (0 <= e < n) into coords at conductor n
void accumulate_power(std::vector<Rational>& coords, const CycContext& c, long e, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  if (e < c.phi) {
    coords[static_cast<std::size_t>(e)] += coeff;
    return;
  }
  const auto& row = c.power_rows[static_cast<std::size_t>(e)];
  for (long i = 0; i < c.phi; ++i) {
    if (row[static_cast<std::size_t>(i)] != 0)
      coords[static_cast<std::size_t>(i)] += coeff * Rational(row[static_cast<std::size_t>(i)]);
  }
}

// exact solve A x = b over Q, A given by columns; returns x, throws if inconsistent
std::vector<Rational> solve_columns(std::vector<std::vector<Rational>> cols,
                                    std::vector<Rational> b) {
  std::size_t rows = b.size(), ncols = cols.size();
  std::size_t rank = 0;
  std::vector<long> pivot_of_col(ncols, -1);
  for (std::size_t j = 0; j < ncols && rank < rows; ++j) {
    std::size_t piv = rank;
    while (piv < rows && sgn(cols[j][piv]) == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t jj = 0; jj < ncols; ++jj) std::swap(cols[jj][rank], cols[jj][piv]);
    std::swap(b[rank], b[piv]);
    Rational inv = 1 / cols[j][rank];
    for (std::size_t jj = j; jj < ncols; ++jj) cols[jj][rank] *= inv;
    b[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(cols[j][r]) == 0) continue;
      Rational f = cols[j][r];
      for (std::size_t jj = j; jj < ncols; ++jj) cols[jj][r] -= f * cols[jj][rank];
      b[r] -= f * b[rank];
    }
    pivot_of_col[j] = static_cast<long>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (sgn(b[r]) != 0) throw std::logic_error("solve_columns: inconsistent system");
  }
  std::vector<Rational> x(ncols);
  for (std::size_t j = 0; j < ncols; ++j) {
    if (pivot_of_col[j] >= 0) x[j] = b[static_cast<std::size_t>(pivot_of_col[j])];
  }
  return x;
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(long n) { return context(n).min_poly; }

Cyclotomic::Cyclotomic() : conductor_(1), coords_(1) {}

Cyclotomic::Cyclotomic(Rational r) : conductor_(1), coords_(1) { coords_[0] = std::move(r); }

Cyclotomic Cyclotomic::zeta(long n, long k) {
  if (n < 1) throw std::invalid_argument("zeta: conductor must be >= 1");
  const CycContext& c = context(n);
  k %= n;
  if (k < 0) k += n;
  Cyclotomic out;
  out.conductor_ = n;
  out.coords_.assign(static_cast<std::size_t>(c.phi), Rational());
  accumulate_power(out.coords_, c, k, make_rational(1));
  return out;
}

Cyclotomic Cyclotomic::reduce(long n, const std::map<long, Rational>& terms) {
  if (n < 1) throw std::invalid_argument("reduce: conductor must be >= 1");
  const CycContext& c = context(n);
  Cyclotomic out;
  out.conductor_ = n;
  out.coords_.assign(static_cast<std::size_t>(c.phi), Rational());
  for (const auto& [e, coeff] : terms) {
    long ee = e % n;
    if (ee < 0) ee += n;
    accumulate_power(out.coords_, c, ee, coeff);
  }
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& q : coords_) {
    if (sgn(q) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  // the power basis starts with zeta^0 = 1, so a value is rational exactly
  // when every higher coordinate vanishes
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) != 0) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value: not rational");
  return coords_[0];
}

Cyclotomic Cyclotomic::lifted_to(long m) const {
  if (m % conductor_ != 0) throw std::invalid_argument("lifted_to: conductor does not divide target");
  if (m == conductor_) return *this;
  const CycContext& c = context(m);
  long k = m / conductor_;
  Cyclotomic out;
  out.conductor_ = m;
  out.coords_.assign(static_cast<std::size_t>(c.phi), Rational());
  for (long i = 0; i < static_cast<long>(coords_.size()); ++i) {
    if (sgn(coords_[static_cast<std::size_t>(i)]) == 0) continue;
    accumulate_power(out.coords_, c, (i * k) % m, coords_[static_cast<std::size_t>(i)]);
  }
  return out;
}

Cyclotomic Cyclotomic::galois(long a) const {
  long n = conductor_;
  if (n == 1) return *this;
  a %= n;
  if (a < 0) a += n;
  if (std::gcd(a, n) != 1) throw std::invalid_argument("galois: exponent not coprime to conductor");
  const CycContext& c = context(n);
  Cyclotomic out;
  out.conductor_ = n;
  out.coords_.assign(coords_.size(), Rational());
  for (long i = 0; i < static_cast<long>(coords_.size()); ++i) {
    if (sgn(coords_[static_cast<std::size_t>(i)]) == 0) continue;
    accumulate_power(out.coords_, c, (i * a) % n, coords_[static_cast<std::size_t>(i)]);
  }
  return out;
}

Cyclotomic Cyclotomic::conjugate() const {
  if (conductor_ <= 2) return *this;
  return galois(conductor_ - 1);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  long m = std::lcm(conductor_, o.conductor_);
  if (m != conductor_) *this = lifted_to(m);
  Cyclotomic rhs = (o.conductor_ == m) ? o : o.lifted_to(m);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  long m = std::lcm(conductor_, o.conductor_);
  if (m != conductor_) *this = lifted_to(m);
  Cyclotomic rhs = (o.conductor_ == m) ? o : o.lifted_to(m);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  long m = std::lcm(conductor_, o.conductor_);
  Cyclotomic lhs = (conductor_ == m) ? *this : lifted_to(m);
  Cyclotomic rhs = (o.conductor_ == m) ? o : o.lifted_to(m);
  const CycContext& c = context(m);
  // raw coefficients of zeta^e for e in [0, n), then one reduction pass
  std::vector<Rational> raw(static_cast<std::size_t>(m));
  bool any = false;
  for (long i = 0; i < static_cast<long>(lhs.coords_.size()); ++i) {
    const Rational& a = lhs.coords_[static_cast<std::size_t>(i)];
    if (sgn(a) == 0) continue;
    for (long j = 0; j < static_cast<long>(rhs.coords_.size()); ++j) {
      const Rational& b = rhs.coords_[static_cast<std::size_t>(j)];
      if (sgn(b) == 0) continue;
      raw[static_cast<std::size_t>((i + j) % m)] += a * b;
      any = true;
    }
  }
  conductor_ = m;
  coords_.assign(static_cast<std::size_t>(c.phi), Rational());
  if (any) {
    for (long e = 0; e < m; ++e) {
      if (sgn(raw[static_cast<std::size_t>(e)]) != 0)
        accumulate_power(coords_, c, e, raw[static_cast<std::size_t>(e)]);
    }
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    for (auto& q : coords_) q = 0;
    return *this;
  }
  for (auto& q : coords_) q *= s;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& q : out.coords_) q = -q;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  long m = std::lcm(a.conductor_, b.conductor_);
  Cyclotomic la = (a.conductor_ == m) ? a : a.lifted_to(m);
  Cyclotomic lb = (b.conductor_ == m) ? b : b.lifted_to(m);
  return la.coords_ == lb.coords_;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  long m = std::lcm(a.conductor_, b.conductor_);
  Cyclotomic la = (a.conductor_ == m) ? a : a.lifted_to(m);
  Cyclotomic lb = (b.conductor_ == m) ? b : b.lifted_to(m);
  for (std::size_t i = 0; i < la.coords_.size(); ++i) {
    int c = cmp(la.coords_[i], lb.coords_[i]);
    if (c != 0) return c;
  }
  return 0;
}

long Cyclotomic::minimal_conductor() const {
  long n = conductor_;
  if (n == 1) return 1;
  const CycContext& c = context(n);
  for (std::uint64_t du : divisors(static_cast<std::uint64_t>(n))) {
    long d = static_cast<long>(du);
    bool fixed = true;
    for (long a : c.units) {
      if (a % d != 1 % d) continue; // only Galois elements trivial on zeta_d
      if (a == 1) continue;
      if (!(galois(a) == *this)) { fixed = false; break; }
    }
    if (fixed) return d;
  }
  return n;
}

Cyclotomic Cyclotomic::minimized() const {
  long d = minimal_conductor();
  if (d == conductor_) return *this;
  long n = conductor_;
  const CycContext& cd = context(d);
  // express the value in the power basis of zeta_d, solving against the
  // lifts of zeta_d^i into the conductor-n basis
  std::vector<std::vector<Rational>> cols;
  cols.reserve(static_cast<std::size_t>(cd.phi));
  for (long i = 0; i < cd.phi; ++i) {
    Cyclotomic basis_vec = Cyclotomic::zeta(d, i).lifted_to(n);
    cols.push_back(basis_vec.coords_);
  }
  std::vector<Rational> x = solve_columns(std::move(cols), coords_);
  Cyclotomic out;
  out.conductor_ = d;
  out.coords_ = std::move(x);
  out.coords_.resize(static_cast<std::size_t>(cd.phi));
  return out;
}

Rational Cyclotomic::trace_from(long d) const {
  Cyclotomic m = minimized();
  if (d % m.conductor_ != 0)
    throw std::invalid_argument("trace_from: value not in the stated field");
  if (d == 1) return m.coords_[0];
  Cyclotomic w = m.lifted_to(d);
  const CycContext& c = context(d);
  Cyclotomic acc;
  for (long a : c.units) acc += w.galois(a);
  Cyclotomic flat = acc.minimized();
  if (flat.conductor() != 1) throw std::logic_error("trace_from: trace not rational");
  return flat.coords()[0];
}

std::string Cyclotomic::str() const {
  Cyclotomic m = minimized();
  if (m.conductor_ == 1) return to_string(m.coords_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.coords_.size(); ++i) {
    if (sgn(m.coords_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(m.coords_[i]);
    if (i >= 1) os << "*z" << m.conductor_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

long field_conductor(const std::vector<Cyclotomic>& values) {
  if (values.empty()) return 1;
  long n = 1;
  for (const auto& v : values) n = std::lcm(n, v.conductor());
  if (n == 1) return 1;
  std::vector<Cyclotomic> lifted;
  lifted.reserve(values.size());
  for (const auto& v : values) lifted.push_back(v.conductor() == n ? v : v.lifted_to(n));
  const CycContext& c = context(n);
  // fixed[a] = every value is fixed by zeta -> zeta^a
  std::vector<char> fixed(c.units.size(), 1);
  for (std::size_t ui = 0; ui < c.units.size(); ++ui) {
    long a = c.units[ui];
    if (a == 1) continue;
    for (const auto& v : lifted) {
      if (!(v.galois(a) == v)) { fixed[ui] = 0; break; }
    }
  }
  for (std::uint64_t du : divisors(static_cast<std::uint64_t>(n))) {
    long d = static_cast<long>(du);
    bool ok = true;
    for (std::size_t ui = 0; ui < c.units.size(); ++ui) {
      if (c.units[ui] % d == 1 % d && !fixed[ui]) { ok = false; break; }
    }
    if (ok) return d;
  }
  return n;
}

} // namespace qga
