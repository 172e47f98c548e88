#pragma once

#include "qga/rational.hpp"

#include <map>
#include <vector>

namespace qga {

// Element of a cyclotomic field Q(zeta_n), stored in the power basis
// 1, zeta, ..., zeta^{phi(n)-1} with coordinates reduced mod the n-th
// cyclotomic polynomial.  The stored conductor is whatever the value was
// built at; minimized() rewrites into the smallest cyclotomic field
// (over divisors of n) that contains the value.
class Cyclotomic {
public:
  Cyclotomic();                         // zero, conductor 1
  explicit Cyclotomic(Rational r);      // rational constant, conductor 1
  explicit Cyclotomic(long r) : Cyclotomic(make_rational(r)) {}

  // zeta_n^k
  static Cyclotomic zeta(long n, long k = 1);

  // sum of coeff * zeta_n^exponent over the map entries (exponents mod n)
  static Cyclotomic reduce(long n, const std::map<long, Rational>& terms);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;             // lies in Q
  Rational rational_value() const;      // requires is_rational()

  // value rewritten into Q(zeta_m); requires conductor() | m
  Cyclotomic lifted_to(long m) const;

  // smallest d | conductor() with the value in Q(zeta_d), and the rewrite
  long minimal_conductor() const;
  Cyclotomic minimized() const;

  // zeta_n -> zeta_n^a for gcd(a, n) = 1
  Cyclotomic galois(long a) const;
  Cyclotomic conjugate() const;

  // sum of all Galois conjugates over Q(zeta_d) / Q; requires the value to
  // lie in Q(zeta_d).  Result is rational.
  Rational trace_from(long d) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& s);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { a += b; return a; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { a -= b; return a; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { a *= b; return a; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { a *= s; return a; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // total order on values at a common conductor; used for canonical sorting
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;

private:
  long conductor_;
  std::vector<Rational> coords_;
};

// conductor of the field generated by all the values: smallest d such that
// every value is fixed by the Galois group of Q(zeta_N) over Q(zeta_d),
// where N is the lcm of the stored conductors
long field_conductor(const std::vector<Cyclotomic>& values);

// n-th cyclotomic polynomial, integer coefficients ascending, degree phi(n)
std::vector<Integer> cyclotomic_polynomial(long n);

} // namespace qga
