#include "qga/char_table.hpp"
#include "qga/families.hpp"
#include "qga/numtheory.hpp"

#include "doctest.h"

#include <algorithm>
#include <vector>

using namespace qga;

namespace {

Group build(const std::string& spec) { return build_family(parse_family_spec(spec)); }

std::vector<int> degree_multiset(const CharacterTable& t) {
  std::vector<int> d;
  for (const Character& c : t.chars) d.push_back(c.degree);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<long> conductor_multiset(const CharacterTable& t) {
  std::vector<long> d;
  for (const Character& c : t.chars) d.push_back(c.conductor);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_SUITE("char_table") {

TEST_CASE("C4 table") {
  CharacterTable t = dixon_character_table(build("cyclic:4"));
  CHECK(t.chars.size() == 4);
  CHECK(degree_multiset(t) == std::vector<int>{1, 1, 1, 1});
  CHECK(conductor_multiset(t) == std::vector<long>{1, 1, 4, 4});
  CHECK(t.exponent == 4);
  verify_character_table(t);
}

TEST_CASE("S3 table is rational") {
  Group s3 = close_generators(3, {{1, 0, 2}, {1, 2, 0}});
  CharacterTable t = dixon_character_table(s3);
  CHECK(t.chars.size() == 3);
  CHECK(degree_multiset(t) == std::vector<int>{1, 1, 2});
  CHECK(conductor_multiset(t) == std::vector<long>{1, 1, 1});
  std::vector<int> sizes = t.class_sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 2, 3});
  verify_character_table(t);
}

TEST_CASE("Q8 and D8 tables differ only in the indicator") {
  CharacterTable q = dixon_character_table(build("quaternion:8"));
  CharacterTable d = dixon_character_table(build("dihedral:8"));
  for (const CharacterTable* t : {&q, &d}) {
    CHECK(t->chars.size() == 5);
    CHECK(degree_multiset(*t) == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(conductor_multiset(*t) == std::vector<long>{1, 1, 1, 1, 1});
    verify_character_table(*t);
  }
  // the degree-2 character takes values 2, -2, 0, 0, 0
  for (const CharacterTable* t : {&q, &d}) {
    const Character& chi = t->chars.back();
    REQUIRE(chi.degree == 2);
    std::vector<Rational> vals;
    for (const Cyclotomic& v : chi.values) {
      REQUIRE(v.is_rational());
      vals.push_back(v.rational_value());
    }
    std::sort(vals.begin(), vals.end());
    CHECK(vals == std::vector<Rational>{make_rational(-2), make_rational(0), make_rational(0),
                                        make_rational(0), make_rational(2)});
  }
  // Frobenius-Schur indicator separates the two groups
  CHECK(character_invariants(q, static_cast<int>(q.chars.size()) - 1).fs_indicator == -1);
  CHECK(character_invariants(d, static_cast<int>(d.chars.size()) - 1).fs_indicator == 1);
}

TEST_CASE("Heisenberg group of order 27") {
  CharacterTable t = dixon_character_table(build("extraspecial:p=3,n=1,exp=p"));
  CHECK(t.chars.size() == 11);
  CHECK(degree_multiset(t) == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3});
  // nontrivial linear characters and both degree-3 characters generate Q(zeta_3)
  CHECK(conductor_multiset(t) == std::vector<long>{1, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3});
  verify_character_table(t);
  // degree-3 characters are faithful
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    if (t.chars[i].degree != 3) continue;
    CHECK(character_invariants(t, static_cast<int>(i)).kernel.size() == 1);
  }
}

TEST_CASE("working prime is admissible") {
  for (const char* spec : {"cyclic:12", "quaternion:8", "extraspecial:p=3,n=1,exp=p2"}) {
    CharacterTable t = dixon_character_table(build(spec));
    CHECK(is_prime(t.modulus));
    CHECK(t.modulus % static_cast<std::uint64_t>(t.exponent) == 1);
    CHECK(t.modulus * t.modulus > 4ull * static_cast<std::uint64_t>(t.group.order()));
  }
}

TEST_CASE("kernels and indicators of C6 characters") {
  // character orders 1, 2, 3, 3, 6, 6 give kernels 6, 3, 2, 2, 1, 1 and
  // minimized conductors 1, 1, 3, 3, 3, 3 (zeta_6 generates Q(zeta_3))
  CharacterTable t = dixon_character_table(build("cyclic:6"));
  std::vector<int> kernels;
  std::vector<long> conductors;
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    CharacterInvariants inv = character_invariants(t, static_cast<int>(i));
    kernels.push_back(inv.kernel.size());
    conductors.push_back(inv.conductor);
    // real characters of an abelian group are the order <= 2 ones
    CHECK(inv.fs_indicator == (inv.conductor == 1 ? 1 : 0));
  }
  std::sort(kernels.begin(), kernels.end());
  std::sort(conductors.begin(), conductors.end());
  CHECK(kernels == std::vector<int>{1, 1, 2, 2, 3, 6});
  CHECK(conductors == std::vector<long>{1, 1, 3, 3, 3, 3});
}

TEST_CASE("galois partition") {
  // C5: the four faithful characters form one orbit
  CharacterTable c5 = dixon_character_table(build("cyclic:5"));
  std::vector<GaloisClass> g5 = galois_partition(c5);
  REQUIRE(g5.size() == 2);
  CHECK(g5[0].members.size() + g5[1].members.size() == 5);

  // Q8: everything is rational, five singleton orbits
  CharacterTable q8 = dixon_character_table(build("quaternion:8"));
  CHECK(galois_partition(q8).size() == 5);

  // order 27: trivial + four linear pairs + one degree-3 pair
  CharacterTable h = dixon_character_table(build("extraspecial:p=3,n=1,exp=p"));
  std::vector<GaloisClass> gh = galois_partition(h);
  REQUIRE(gh.size() == 6);
  int deg3 = 0;
  for (const GaloisClass& cls : gh) {
    if (cls.degree == 3) {
      ++deg3;
      CHECK(cls.members.size() == 2);
      CHECK(cls.field_conductor == 3);
      CHECK(cls.kernel.size() == 1);
      // rational character value at the identity class is 2 * 3
      CHECK(cls.rational_character[0] == make_rational(6));
    }
  }
  CHECK(deg3 == 1);
}

TEST_CASE("orbit sizes match the field degree on p-group tables") {
  for (const char* spec : {"cyclic:16", "dihedral:8", "extraspecial:p=5,n=1,exp=p"}) {
    CharacterTable t = dixon_character_table(build(spec));
    for (const GaloisClass& cls : galois_partition(t))
      CHECK(cls.members.size() ==
            euler_phi(static_cast<std::uint64_t>(cls.field_conductor)));
  }
}

TEST_CASE("tampered table fails verification") {
  CharacterTable t = dixon_character_table(build("cyclic:4"));
  verify_character_table(t);
  CharacterTable bad = t;
  bad.chars[0].values[1] = Cyclotomic(make_rational(2));
  CHECK_THROWS_AS(verify_character_table(bad), std::runtime_error);
  CharacterTable missing = t;
  missing.chars.pop_back();
  CHECK_THROWS_AS(verify_character_table(missing), std::runtime_error);
}

TEST_CASE("class multiplication constants are consistent") {
  // sum over one row of structure constants counts |class_i| * |class_j|
  Group g = build("dihedral:8");
  CharacterTable t = dixon_character_table(g);
  auto cm = class_mult_table(g);
  std::size_t k = t.class_sizes.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      long total = 0;
      for (std::size_t l = 0; l < k; ++l) total += cm[i][j][l] * t.class_sizes[l];
      CHECK(total == static_cast<long>(t.class_sizes[i]) * t.class_sizes[j]);
    }
}

}
