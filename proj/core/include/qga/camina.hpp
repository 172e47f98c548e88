#pragma once

#include "qga/group.hpp"

#include <string>
#include <vector>

namespace qga {

// (G, N) for proper nontrivial normal N: every coset gN with g outside N is
// contained in the conjugacy class of g
bool is_camina_pair(const Group& g, const Subgroup& n);

struct StructuralCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CaminaProfile {
  bool is_camina_group = false;       // (G, G') is a Camina pair
  bool is_p_group = false;
  long p = 0;                          // prime when is_p_group
  int nilpotency_class = 0;            // 0 when not nilpotent
  bool vz = false;                     // nonabelian with G' = Z(G) and |G/Z| a square times... see checks
  std::vector<Subgroup> camina_pair_kernels;  // all N with (G, N) a Camina pair
  std::vector<StructuralCheck> checks;
  Subgroup center;
  Subgroup derived;
  Subgroup second_center;
  std::vector<Subgroup> lower_central;
};

// full structural analysis; abelian groups are reported as non-Camina
CaminaProfile camina_profile(const Group& g);

} // namespace qga
