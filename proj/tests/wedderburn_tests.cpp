#include "qga/wedderburn.hpp"
#include "qga/families.hpp"

#include "doctest.h"

#include <nlohmann/json.hpp>

#include <vector>

using namespace qga;

namespace {

Group build(const std::string& spec) { return build_family(parse_family_spec(spec)); }

SimpleComponent comp(long mult, long deg, long cond, DivisionKind div = DivisionKind::field) {
  SimpleComponent c;
  c.multiplicity = mult;
  c.matrix_degree = deg;
  c.center_conductor = cond;
  c.division = div;
  return c;
}

WedderburnDecomposition dec(long order, std::vector<SimpleComponent> parts) {
  return canonical_decomposition(order, std::move(parts));
}

}  // namespace

TEST_SUITE("wedderburn") {

TEST_CASE("component dimensions") {
  CHECK(comp(1, 3, 3).dimension_each() == 18);   // M_3 over a quadratic field
  CHECK(comp(1, 1, 1).dimension_each() == 1);
  CHECK(comp(1, 1, 5).dimension_each() == 4);
  CHECK(comp(1, 2, 1, DivisionKind::rational_quaternion).dimension_each() == 16);
  CHECK(comp(1, 1, 1, DivisionKind::rational_quaternion).dimension_each() == 4);
  CHECK(comp(5, 2, 1).dimension_total() == 20);
}

TEST_CASE("canonical form merges and normalizes") {
  WedderburnDecomposition d = dec(8, {comp(1, 2, 1), comp(1, 1, 1), comp(3, 1, 1)});
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0].multiplicity == 4);
  CHECK(d.components[0].matrix_degree == 1);
  CHECK(d.components[1].matrix_degree == 2);
  CHECK(d.total_dimension() == 8);

  // conductor 2 is the rationals, conductor 6 is the third cyclotomic field
  WedderburnDecomposition e = dec(6, {comp(1, 1, 1), comp(1, 1, 2), comp(1, 1, 3), comp(1, 1, 6)});
  REQUIRE(e.components.size() == 2);
  CHECK(e.components[0].center_conductor == 1);
  CHECK(e.components[0].multiplicity == 2);
  CHECK(e.components[1].center_conductor == 3);
  CHECK(e.components[1].multiplicity == 2);

  CHECK_THROWS_AS(dec(4, {comp(0, 1, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(dec(4, {comp(1, 1, 3, DivisionKind::rational_quaternion)}),
                  std::invalid_argument);
}

TEST_CASE("abelian decompositions") {
  CHECK(decompose_abelian(build("cyclic:1")) == dec(1, {comp(1, 1, 1)}));
  CHECK(decompose_abelian(build("cyclic:6")) == dec(6, {comp(2, 1, 1), comp(2, 1, 3)}));
  CHECK(decompose_abelian(build("cyclic:8")) ==
        dec(8, {comp(2, 1, 1), comp(1, 1, 4), comp(1, 1, 8)}));
  CHECK(decompose_abelian(build("elem:2^2")) == dec(4, {comp(4, 1, 1)}));
  CHECK(decompose_abelian(build("elem:3^2")) == dec(9, {comp(1, 1, 1), comp(4, 1, 3)}));
  // C2 x C4: one element of order 1, three of order 2, four of order 4
  CHECK(decompose_abelian(build("abelian:2,4")) == dec(8, {comp(4, 1, 1), comp(2, 1, 4)}));
}

TEST_CASE("VZ decompositions of the order-8 groups") {
  CHECK(decompose_vz(build("quaternion:8")) ==
        dec(8, {comp(4, 1, 1), comp(1, 1, 1, DivisionKind::rational_quaternion)}));
  CHECK(decompose_vz(build("dihedral:8")) == dec(8, {comp(4, 1, 1), comp(1, 2, 1)}));
  CHECK_THROWS_AS(decompose_vz(build("cyclic:4")), std::invalid_argument);
}

TEST_CASE("closed form for class-2 Camina groups") {
  // order 27: Q + 4 Q(zeta_3) + M_3(Q(zeta_3))
  WedderburnDecomposition h27 = dec(27, {comp(1, 1, 1), comp(4, 1, 3), comp(1, 3, 3)});
  CHECK(decompose_camina(build("extraspecial:p=3,n=1,exp=p")) == h27);
  CHECK(decompose_camina(build("extraspecial:p=3,n=1,exp=p2")) == h27);

  // order 125: Q + 6 Q(zeta_5) + M_5(Q(zeta_5))
  WedderburnDecomposition f125 = dec(125, {comp(1, 1, 1), comp(6, 1, 5), comp(1, 5, 5)});
  CHECK(decompose_camina(build("extraspecial:p=5,n=1,exp=p")) == f125);
  CHECK(decompose_camina(build("extraspecial:p=5,n=1,exp=p2")) == f125);

  // order 32: 16 Q + M_4(Q) for type +, 16 Q + M_2(H(Q)) for type -
  CHECK(decompose_camina(build("extraspecial:p=2,n=2,type=+")) ==
        dec(32, {comp(16, 1, 1), comp(1, 4, 1)}));
  CHECK(decompose_camina(build("extraspecial:p=2,n=2,type=-")) ==
        dec(32, {comp(16, 1, 1), comp(1, 2, 1, DivisionKind::rational_quaternion)}));

  // abelian input falls back to the abelian formula
  CHECK(decompose_camina(build("cyclic:6")) == decompose_abelian(build("cyclic:6")));
  // nonabelian non-Camina input is rejected
  CHECK_THROWS_AS(decompose_camina(build("dihedral:16")), std::invalid_argument);
}

TEST_CASE("class-3 parameter formula") {
  // p=3, n=2, z=1, order 3^7: Q + 40 Q(zeta_3) + 4 M_9(Q(zeta_3)) + M_27(Q(zeta_3))
  WedderburnDecomposition d = decompose_camina_class3_params(3, 2, 1);
  CHECK(d == dec(2187, {comp(1, 1, 1), comp(40, 1, 3), comp(4, 9, 3), comp(1, 27, 3)}));
  CHECK(d.total_dimension() == 2187);

  WedderburnDecomposition d2 = decompose_camina_class3_params(3, 2, 2);
  CHECK(d2 == dec(6561, {comp(1, 1, 1), comp(40, 1, 3), comp(4, 9, 3), comp(4, 27, 3)}));
  CHECK(d2.total_dimension() == 6561);

  CHECK(decompose_camina_class3_params(5, 2, 1).total_dimension() == 78125);  // 5^7

  CHECK_THROWS_AS(decompose_camina_class3_params(2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(decompose_camina_class3_params(3, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(decompose_camina_class3_params(3, 2, 0), std::invalid_argument);
}

TEST_CASE("oracle agrees with closed forms") {
  CHECK(decompose_oracle(build("cyclic:5")) == dec(5, {comp(1, 1, 1), comp(1, 1, 5)}));
  CHECK(decompose_oracle(build("cyclic:9")) ==
        dec(9, {comp(1, 1, 1), comp(1, 1, 3), comp(1, 1, 9)}));
  CHECK(decompose_oracle(build("quaternion:8")) == decompose_vz(build("quaternion:8")));
  CHECK(decompose_oracle(build("dihedral:8")) == decompose_vz(build("dihedral:8")));
  CHECK(decompose_oracle(build("extraspecial:p=3,n=1,exp=p2")) ==
        decompose_camina(build("extraspecial:p=3,n=1,exp=p2")));
}

TEST_CASE("oracle rejects groups outside its certified domain") {
  // the degree-3 characters of the Frobenius group of order 21 generate a
  // quadratic subfield of the 7th cyclotomic field, so the Galois-orbit
  // counting the oracle relies on does not apply
  Group f21 = close_generators(7, {{1, 2, 3, 4, 5, 6, 0}, {0, 2, 4, 6, 1, 3, 5}});
  REQUIRE(f21.order() == 21);
  CHECK_THROWS_AS(decompose_oracle(f21), std::invalid_argument);
  // even order, not a 2-group
  CHECK_THROWS_AS(decompose_oracle(build("dihedral:12")), std::invalid_argument);
}

TEST_CASE("quaternion counts") {
  CHECK(quaternion_count(build("quaternion:8")) == 1);
  CHECK(quaternion_count(build("dihedral:8")) == 0);
  CHECK(quaternion_count(build("extraspecial:p=2,n=2,type=-")) == 1);
  CHECK(quaternion_count(build("extraspecial:p=2,n=2,type=+")) == 0);
  CHECK(quaternion_count(build("extraspecial:p=2,n=3,type=-")) == 1);
  CHECK(quaternion_count(build("cyclic:8")) == 0);
  CHECK(quaternion_count(build("elem:2^3")) == 0);
  // odd-order center short-circuits to zero
  CHECK(quaternion_count(build("extraspecial:p=3,n=1,exp=p")) == 0);
  // |G/Z| = 8 is not a square: outside the VZ shape this count lives on
  CHECK_THROWS_AS(quaternion_count(build("quaternion:16")), std::invalid_argument);
}

TEST_CASE("schur index policy") {
  CharacterTable q8 = dixon_character_table(build("quaternion:8"));
  for (const GaloisClass& cls : galois_partition(q8))
    CHECK(schur_index_policy(q8.group, cls) == (cls.degree == 2 ? 2 : 1));
  CharacterTable d8 = dixon_character_table(build("dihedral:8"));
  for (const GaloisClass& cls : galois_partition(d8))
    CHECK(schur_index_policy(d8.group, cls) == 1);
  CharacterTable h27 = dixon_character_table(build("extraspecial:p=3,n=1,exp=p"));
  for (const GaloisClass& cls : galois_partition(h27))
    CHECK(schur_index_policy(h27.group, cls) == 1);
}

TEST_CASE("verification report") {
  WedderburnDecomposition a = decompose_camina(build("extraspecial:p=3,n=1,exp=p"));
  DecompositionReport good = verify_decomposition(a, a);
  CHECK(good.match);
  CHECK(good.dimensions_ok);

  WedderburnDecomposition wrong = dec(27, {comp(1, 1, 1), comp(4, 1, 9), comp(1, 3, 3)});
  DecompositionReport bad = verify_decomposition(a, wrong);
  CHECK_FALSE(bad.match);
  CHECK_FALSE(bad.notes.empty());

  // dimension check is independent of matching
  WedderburnDecomposition tiny = dec(27, {comp(1, 1, 1)});
  DecompositionReport dims = verify_decomposition(tiny, tiny);
  CHECK_FALSE(dims.dimensions_ok);
}

TEST_CASE("JSON serialization is canonical") {
  WedderburnDecomposition a = decompose_camina(build("quaternion:8"));
  std::string s1 = decomposition_to_json(a);
  CHECK(s1 == decomposition_to_json(a));
  nlohmann::json j = nlohmann::json::parse(s1);
  CHECK(j["group_order"] == 8);
  REQUIRE(j["components"].is_array());
  REQUIRE(j["components"].size() == 2);
  CHECK(j["components"][0]["multiplicity"] == 4);
  CHECK(j["components"][0]["degree"] == 1);
  CHECK(j["components"][0]["center_conductor"] == 1);
  CHECK(j["components"][0]["division"] == "field");
  CHECK(j["components"][1]["division"] == "rational_quaternion");
  std::string pretty = decomposition_pretty(a);
  CHECK(pretty.find("H(Q)") != std::string::npos);
}

}
