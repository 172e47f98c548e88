#pragma once

#include "qga/group.hpp"

#include <string>
#include <vector>

namespace qga {

enum class Family {
  cyclic,
  abelian,
  elementary_abelian,
  dihedral,
  quaternion,
  extraspecial,
};

struct FamilySpec {
  Family family = Family::cyclic;
  long order = 0;                 // cyclic, dihedral, quaternion
  long p = 0;                     // elementary_abelian, extraspecial
  long n = 0;                     // elementary_abelian rank; extraspecial order p^{1+2n}
  std::string variant;            // extraspecial: "p" | "p2" (odd p), "+" | "-" (p = 2)
  std::vector<long> factors;      // abelian: cyclic factor orders
};

Group build_family(const FamilySpec& spec);

// central product gluing the (cyclic) centers; both centers must be cyclic of
// the same order
Group central_product(const Group& a, const Group& b);

// spec described as text, e.g. "cyclic:12", "abelian:2,4", "dihedral:8",
// "quaternion:8", "elem:3^2", "extraspecial:p=3,n=1,exp=p",
// "extraspecial:p=2,n=2,type=-"
FamilySpec parse_family_spec(const std::string& text);
std::string family_spec_name(const FamilySpec& spec);

} // namespace qga
