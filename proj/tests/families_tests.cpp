#include "qga/families.hpp"
#include "qga/group.hpp"

#include "doctest.h"

#include <vector>

using namespace qga;

namespace {

Group build(const std::string& spec) { return build_family(parse_family_spec(spec)); }

// elements of order exactly two
int count_involutions(const Group& g) {
  int c = 0;
  for (int x = 1; x < g.order(); ++x)
    if (g.mul(x, x) == 0) ++c;
  return c;
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("cyclic and abelian") {
  Group c12 = build("cyclic:12");
  CHECK(c12.order() == 12);
  CHECK(c12.is_abelian());
  CHECK(c12.exponent() == 12);

  Group a = build("abelian:2,4");
  CHECK(a.order() == 8);
  CHECK(a.is_abelian());
  CHECK(a.exponent() == 4);

  Group e = build("elem:3^2");
  CHECK(e.order() == 9);
  CHECK(e.exponent() == 3);

  CHECK(build("cyclic:1").order() == 1);
}

TEST_CASE("dihedral and quaternion") {
  Group d8 = build("dihedral:8");
  CHECK(d8.order() == 8);
  CHECK_FALSE(d8.is_abelian());
  CHECK(count_involutions(d8) == 5);

  Group d12 = build("dihedral:12");
  CHECK(d12.order() == 12);
  CHECK(count_involutions(d12) == 7);  // 6 reflections + the central rotation

  Group q8 = build("quaternion:8");
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.is_abelian());
  CHECK(count_involutions(q8) == 1);

  Group q16 = build("quaternion:16");
  CHECK(q16.order() == 16);
  CHECK(count_involutions(q16) == 1);
  CHECK(q16.exponent() == 8);
}

TEST_CASE("family validation errors") {
  CHECK_THROWS_AS(build("cyclic:0"), std::invalid_argument);
  CHECK_THROWS_AS(build("dihedral:9"), std::invalid_argument);
  CHECK_THROWS_AS(build("quaternion:12"), std::invalid_argument);
  CHECK_THROWS_AS(build("quaternion:4"), std::invalid_argument);
  CHECK_THROWS_AS(build("elem:4^2"), std::invalid_argument);
  CHECK_THROWS_AS(build("extraspecial:p=4,n=1,exp=p"), std::invalid_argument);
  CHECK_THROWS_AS(build("extraspecial:p=3,n=1,exp=p^2"), std::invalid_argument);
  CHECK_THROWS_AS(build("extraspecial:p=2,n=1,type=x"), std::invalid_argument);
  CHECK_THROWS_AS(build("extraspecial:p=3,n=0,exp=p"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("nosuch:5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("cyclic"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("cyclic:five"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("abelian:"), std::invalid_argument);
}

TEST_CASE("extraspecial 2-groups by involution count") {
  // # elements of order <= 2 in an extraspecial group of order 2^(1+2n) of
  // type eps is 2^(2n) + eps 2^n: the squaring map factors through a
  // quadratic form with 2^(2n-1) + eps 2^(n-1) zeros, each lifting twice
  Group p1 = build("extraspecial:p=2,n=1,type=+");
  Group m1 = build("extraspecial:p=2,n=1,type=-");
  CHECK(p1.order() == 8);
  CHECK(m1.order() == 8);
  CHECK(count_involutions(p1) == 5);   // 4 + 2 - 1
  CHECK(count_involutions(m1) == 1);   // 4 - 2 - 1

  Group p2 = build("extraspecial:p=2,n=2,type=+");
  Group m2 = build("extraspecial:p=2,n=2,type=-");
  CHECK(p2.order() == 32);
  CHECK(m2.order() == 32);
  CHECK(count_involutions(p2) == 19);  // 16 + 4 - 1
  CHECK(count_involutions(m2) == 11);  // 16 - 4 - 1

  Group p3 = build("extraspecial:p=2,n=3,type=+");
  Group m3 = build("extraspecial:p=2,n=3,type=-");
  CHECK(p3.order() == 128);
  CHECK(count_involutions(p3) == 71);  // 64 + 8 - 1
  CHECK(count_involutions(m3) == 55);  // 64 - 8 - 1

  for (const Group* g : {&p2, &m2}) {
    CharacteristicData cd = characteristic_subgroups(*g);
    CHECK(cd.center.size() == 2);
    CHECK(cd.derived.size() == 2);
    CHECK(*cd.nilpotency_class == 2);
  }
}

TEST_CASE("odd extraspecial groups") {
  Group hp = build("extraspecial:p=3,n=1,exp=p");
  CHECK(hp.order() == 27);
  CHECK(hp.exponent() == 3);

  Group hq = build("extraspecial:p=3,n=1,exp=p2");
  CHECK(hq.order() == 27);
  CHECK(hq.exponent() == 9);

  Group f5 = build("extraspecial:p=5,n=1,exp=p");
  CHECK(f5.order() == 125);
  CHECK(f5.exponent() == 5);

  Group big = build("extraspecial:p=3,n=2,exp=p");
  CHECK(big.order() == 243);
  CHECK(big.exponent() == 3);

  for (const Group* g : {&hp, &hq, &f5, &big}) {
    CharacteristicData cd = characteristic_subgroups(*g);
    CHECK(cd.center == cd.derived);
    CHECK(*cd.nilpotency_class == 2);
  }
  CHECK(characteristic_subgroups(hp).center.size() == 3);
  CHECK(characteristic_subgroups(f5).center.size() == 5);
  CHECK(characteristic_subgroups(big).center.size() == 3);
}

TEST_CASE("central products") {
  Group d8 = build("dihedral:8");
  Group q8 = build("quaternion:8");
  // classical isomorphism: D8 o D8 = Q8 o Q8 (type +), D8 o Q8 (type -)
  CHECK(count_involutions(central_product(d8, d8)) == 19);
  CHECK(count_involutions(central_product(q8, q8)) == 19);
  CHECK(count_involutions(central_product(d8, q8)) == 11);
  CHECK(central_product(d8, q8).order() == 32);

  Group c4 = build("cyclic:4");
  CHECK_THROWS_AS(central_product(d8, c4), std::invalid_argument);
}

TEST_CASE("spec parsing round trips") {
  for (const char* name :
       {"cyclic:12", "abelian:2,4", "elem:3^2", "dihedral:8", "quaternion:16",
        "extraspecial:p=3,n=1,exp=p", "extraspecial:p=3,n=1,exp=p2",
        "extraspecial:p=2,n=2,type=-"}) {
    FamilySpec s = parse_family_spec(name);
    CHECK(family_spec_name(s) == name);
    FamilySpec s2 = parse_family_spec(family_spec_name(s));
    CHECK(s2.family == s.family);
    CHECK(s2.order == s.order);
    CHECK(s2.p == s.p);
    CHECK(s2.n == s.n);
    CHECK(s2.variant == s.variant);
    CHECK(s2.factors == s.factors);
  }
}

}
