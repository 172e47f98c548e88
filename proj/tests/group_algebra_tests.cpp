#include "qga/group_algebra.hpp"
#include "qga/families.hpp"

#include "doctest.h"

#include <nlohmann/json.hpp>

#include <optional>
#include <vector>

using namespace qga;

namespace {

Group build(const std::string& spec) { return build_family(parse_family_spec(spec)); }

AlgebraElement idem_of_degree(const CharacterTable& t, int degree, int nth = 0) {
  int seen = 0;
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    if (t.chars[i].degree != degree) continue;
    if (seen++ == nth) return rational_idempotent(t, static_cast<int>(i));
  }
  throw std::logic_error("no such character");
}

}  // namespace

TEST_SUITE("group_algebra") {

TEST_CASE("regular representation arithmetic") {
  Group g = build("cyclic:6");
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      CHECK(AlgebraElement::basis(g, x) * AlgebraElement::basis(g, y) ==
            AlgebraElement::basis(g, g.mul(x, y)));
  AlgebraElement one = AlgebraElement::one(g);
  AlgebraElement a = AlgebraElement::basis(g, 1) + AlgebraElement::basis(g, 2) * make_rational(3);
  CHECK(a * one == a);
  CHECK(one * a == a);
  CHECK(a.support_size() == 2);
  CHECK((a - a).is_zero());
  CHECK(AlgebraElement(g).is_zero());
  CHECK((a * make_rational(0)).is_zero());

  Group h = build("cyclic:3");
  CHECK_THROWS_AS((void)(AlgebraElement(g) + AlgebraElement(h)), std::invalid_argument);
}

TEST_CASE("centrality") {
  Group d8 = build("dihedral:8");
  ConjugacyPartition classes = conjugacy_classes(d8);
  for (const auto& cls : classes.classes) {
    AlgebraElement sum(d8);
    for (int x : cls) sum.at(x) = make_rational(1);
    CHECK(sum.is_central());
  }
  // a basis element of a noncentral element is not central
  CharacteristicData cd = characteristic_subgroups(d8);
  for (int x = 0; x < 8; ++x) {
    if (!cd.center.contains(x)) {
      CHECK_FALSE(AlgebraElement::basis(d8, x).is_central());
      break;
    }
  }
  CHECK(AlgebraElement::one(d8).is_central());
}

TEST_CASE("subgroup averages are idempotent") {
  Group c4 = build("cyclic:4");
  AlgebraElement all = hat(c4, full_subgroup(c4).members);
  CHECK(all.is_idempotent());
  CHECK(all.is_central());
  Subgroup half = subgroup_closure(c4, {2});
  AlgebraElement h = hat(c4, half.members);
  CHECK(h.is_idempotent());
  CHECK_THROWS_AS(hat(c4, {}), std::invalid_argument);
}

TEST_CASE("epsilon elements by hand in C4") {
  Group c4 = build("cyclic:4");
  Subgroup z2 = subgroup_closure(c4, {2});
  // epsilon(G, N) for N of index 2: hat(N) - hat(G), supported on
  // (1/4)(1 - g + g^2 - g^3) with g the generator
  AlgebraElement e = epsilon(c4, full_subgroup(c4), z2);
  AlgebraElement expect(c4);
  expect.at(0) = make_rational(1, 4);
  expect.at(1) = make_rational(-1, 4);
  expect.at(2) = make_rational(1, 4);
  expect.at(3) = make_rational(-1, 4);
  CHECK(e == expect);
  CHECK(e.is_idempotent());
  // epsilon(N, N) is the plain average
  CHECK(epsilon(c4, z2, z2) == hat(c4, z2.members));
}

TEST_CASE("rational idempotent of C3 by hand") {
  Group c3 = build("cyclic:3");
  CharacterTable t = dixon_character_table(c3);
  // the two nontrivial characters form one orbit; its idempotent is 1 minus
  // the group average
  AlgebraElement e = idem_of_degree(t, 1, 1);
  AlgebraElement expect(c3);
  expect.at(0) = make_rational(2, 3);
  expect.at(1) = make_rational(-1, 3);
  expect.at(2) = make_rational(-1, 3);
  CHECK(e == expect);
}

TEST_CASE("quaternion degree-2 idempotent and its component") {
  Group q8 = build("quaternion:8");
  CharacterTable t = dixon_character_table(q8);
  AlgebraElement e = idem_of_degree(t, 2);
  // (1 - z)/2 with z the unique involution
  int z = -1;
  for (int x = 1; x < 8; ++x)
    if (q8.mul(x, x) == 0) z = x;
  REQUIRE(z > 0);
  AlgebraElement expect(q8);
  expect.at(0) = make_rational(1, 2);
  expect.at(z) = make_rational(-1, 2);
  CHECK(e == expect);
  CHECK(e.is_idempotent());
  CHECK(e.is_central());
  // the quaternion component H(Q) has rational dimension 4
  CHECK(component_dimension(e) == 4);
}

TEST_CASE("component dimensions across small groups") {
  Group c4 = build("cyclic:4");
  CharacterTable t4 = dixon_character_table(c4);
  CHECK(component_dimension(rational_idempotent(t4, 0)) == 1);
  // the faithful orbit spans Q(i), dimension 2
  for (std::size_t i = 0; i < t4.chars.size(); ++i)
    if (t4.chars[i].conductor == 4)
      CHECK(component_dimension(rational_idempotent(t4, static_cast<int>(i))) == 2);

  Group d8 = build("dihedral:8");
  CharacterTable t8 = dixon_character_table(d8);
  CHECK(component_dimension(idem_of_degree(t8, 2)) == 4);  // M_2(Q)

  // results do not depend on the sampling seed
  AlgebraElement e = idem_of_degree(t8, 2);
  CHECK(component_dimension(e, 1) == 4);
  CHECK(component_dimension(e, 42) == 4);
  CHECK(component_dimension(e, 0xfeedface) == 4);

  AlgebraElement not_idem = AlgebraElement::basis(d8, 1);
  CHECK_THROWS_AS(component_dimension(not_idem), std::invalid_argument);
}

TEST_CASE("predicted idempotents") {
  Group q8 = build("quaternion:8");
  CharacterTable t = dixon_character_table(q8);
  CaminaProfile prof = camina_profile(q8);
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    std::optional<AlgebraElement> p = predicted_idempotent(t, static_cast<int>(i), prof);
    REQUIRE(p.has_value());
    CHECK(*p == rational_idempotent(t, static_cast<int>(i)));
  }

  // nonlinear characters of a non-Camina group have no closed-form prediction
  Group d16 = build("dihedral:16");
  CharacterTable td = dixon_character_table(d16);
  CaminaProfile profd = camina_profile(d16);
  bool saw_nonlinear = false;
  for (std::size_t i = 0; i < td.chars.size(); ++i) {
    if (td.chars[i].degree == 1) continue;
    saw_nonlinear = true;
    CHECK_FALSE(predicted_idempotent(td, static_cast<int>(i), profd).has_value());
  }
  CHECK(saw_nonlinear);
}

TEST_CASE("the nonlinear idempotent of the Heisenberg group") {
  // both degree-3 characters lie in one Galois class with faithful kernel, so
  // the single nonlinear idempotent is 1 - hat(Z)
  Group h27 = build("extraspecial:p=3,n=1,exp=p");
  CharacterTable t = dixon_character_table(h27);
  CaminaProfile prof = camina_profile(h27);
  AlgebraElement e = idem_of_degree(t, 3);
  AlgebraElement expect = AlgebraElement::one(h27) - hat(h27, prof.center.members);
  CHECK(e == expect);
  CHECK(component_dimension(e) == 18);  // M_3(Q(zeta_3))
  std::optional<AlgebraElement> p;
  for (std::size_t i = 0; i < t.chars.size(); ++i)
    if (t.chars[i].degree == 3) {
      p = predicted_idempotent(t, static_cast<int>(i), prof);
      break;
    }
  REQUIRE(p.has_value());
  CHECK(*p == e);
}

TEST_CASE("complete set verification") {
  for (const char* spec : {"cyclic:6", "dihedral:8", "abelian:2,4"}) {
    Group g = build(spec);
    CharacterTable t = dixon_character_table(g);
    CaminaProfile prof = camina_profile(g);
    CompleteSetReport rep = verify_complete_set(t, prof);
    CHECK(rep.pairwise_orthogonal);
    CHECK(rep.sums_to_one);
    CHECK(rep.all_pass);
    for (const IdempotentCheck& chk : rep.checks) {
      CHECK(chk.idempotent);
      CHECK(chk.central);
      CHECK(chk.dimension == chk.expected_dimension);
      CHECK(chk.has_prediction);
      CHECK(chk.prediction_matches);
    }
  }
}

TEST_CASE("threaded verification matches single-threaded") {
  Group g = build("dihedral:8");
  CharacterTable t = dixon_character_table(g);
  CaminaProfile prof = camina_profile(g);
  CompleteSetReport a = verify_complete_set(t, prof, 1);
  CompleteSetReport b = verify_complete_set(t, prof, 4);
  REQUIRE(a.checks.size() == b.checks.size());
  CHECK(a.all_pass == b.all_pass);
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].char_index == b.checks[i].char_index);
    CHECK(a.checks[i].dimension == b.checks[i].dimension);
    CHECK(a.checks[i].prediction_kind == b.checks[i].prediction_kind);
  }
}

TEST_CASE("idempotent JSON dump") {
  Group q8 = build("quaternion:8");
  CharacterTable t = dixon_character_table(q8);
  AlgebraElement e = idem_of_degree(t, 2);
  int idx = 0;
  for (std::size_t i = 0; i < t.chars.size(); ++i)
    if (t.chars[i].degree == 2) idx = static_cast<int>(i);
  std::string s = idempotent_to_json(e, idx);
  nlohmann::json j = nlohmann::json::parse(s);
  CHECK(j["character"] == idx);
  REQUIRE(j["coeffs"].is_array());
  CHECK(j["coeffs"].size() == 2);  // only the nonzero coefficients appear
  CHECK(j["coeffs"][0]["g"] == 0);
  CHECK(j["coeffs"][0]["num"] == "1");
  CHECK(j["coeffs"][0]["den"] == "2");
  // deterministic
  CHECK(idempotent_to_json(e, idx) == s);
}

}
