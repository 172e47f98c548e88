#pragma once

#include "qga/camina.hpp"
#include "qga/char_table.hpp"
#include "qga/group.hpp"

#include <string>
#include <vector>

namespace qga {

enum class DivisionKind { field, rational_quaternion };

struct SimpleComponent {
  long multiplicity = 1;
  long matrix_degree = 1;
  long center_conductor = 1;   // component center is the cyclotomic field Q(zeta_d)
  DivisionKind division = DivisionKind::field;

  // dimension over Q of one copy: degree^2 * phi(d) * (4 for the quaternion algebra)
  Integer dimension_each() const;
  Integer dimension_total() const;  // multiplicity * dimension_each
};

bool operator==(const SimpleComponent& a, const SimpleComponent& b);

struct WedderburnDecomposition {
  long group_order = 0;
  std::vector<SimpleComponent> components;  // canonical order, multiplicities merged

  Integer total_dimension() const;
};

// sorts by (center_conductor, matrix_degree, division, multiplicity) and merges
// equal shapes by adding multiplicities
WedderburnDecomposition canonical_decomposition(long group_order,
                                                std::vector<SimpleComponent> parts);

bool operator==(const WedderburnDecomposition& a, const WedderburnDecomposition& b);

// abelian path: counts of elements by order
WedderburnDecomposition decompose_abelian(const Group& g);

// nonabelian groups whose nonlinear characters vanish off the center
WedderburnDecomposition decompose_vz(const Group& g);

// dispatch on the Camina profile: abelian/VZ/class-2/class-3 closed forms
WedderburnDecomposition decompose_camina(const Group& g);
WedderburnDecomposition decompose_camina(const Group& g, const CaminaProfile& prof);

// class-3 closed form from parameters alone: |G/G'| = p^{2n}, |G'/Z| = p^n,
// |Z| = p^z
WedderburnDecomposition decompose_camina_class3_params(long p, long n, long z);

// character-table path
WedderburnDecomposition decompose_oracle(const Group& g);
WedderburnDecomposition decompose_oracle(const CharacterTable& t);

// Schur index of the simple component of a Galois class, by the policy:
// 1 for abelian, odd-order, and odd-p groups; for 2-groups, 2 exactly when
// the indicator is -1; anything else is rejected
int schur_index_policy(const Group& g, const GaloisClass& cls);

// number of nonlinear rational quaternionic components of a VZ 2-group,
// computed from the squaring map on the center (no character table)
long quaternion_count(const Group& g);

struct DecompositionReport {
  bool match = false;
  bool dimensions_ok = false;
  std::vector<std::string> notes;
};

DecompositionReport verify_decomposition(const WedderburnDecomposition& formula,
                                         const WedderburnDecomposition& oracle);

std::string decomposition_to_json(const WedderburnDecomposition& d);
std::string decomposition_pretty(const WedderburnDecomposition& d);

} // namespace qga
