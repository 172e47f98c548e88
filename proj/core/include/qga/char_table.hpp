#pragma once

#include "qga/cyclotomic.hpp"
#include "qga/group.hpp"

#include <cstdint>
#include <vector>

namespace qga {

struct Character {
  int degree = 0;
  std::vector<Cyclotomic> values;  // per conjugacy class, each minimized
  long conductor = 1;              // conductor of the field the values generate
};

struct CharacterTable {
  Group group;
  ConjugacyPartition classes;
  std::vector<int> class_sizes;
  std::vector<int> inverse_class;  // class index of the inverses of a class
  std::vector<Character> chars;    // sorted by (degree, conductor, values)
  long exponent = 1;
  std::uint64_t modulus = 0;       // prime the table was computed mod
};

// a[i][j][k] = #{x in C_i : x^{-1} g_k in C_j}, g_k the class representative
std::vector<std::vector<std::vector<long>>> class_mult_table(const Group& g);

// exact character table via eigenspace refinement of the class-sum matrices
// over a prime field, followed by lifting to cyclotomic values
CharacterTable dixon_character_table(const Group& g);

struct CharacterInvariants {
  Subgroup kernel;
  long conductor = 1;
  int fs_indicator = 0;  // -1, 0, or 1
};

CharacterInvariants character_invariants(const CharacterTable& t, int char_index);

struct GaloisClass {
  std::vector<int> members;  // character indices, ascending
  long field_conductor = 1;
  int degree = 0;
  Subgroup kernel;
  int fs_indicator = 0;
  std::vector<Rational> rational_character;  // per class: sum over the orbit
  int schur_index = 0;                       // 0 until a policy stamps it
};

std::vector<GaloisClass> galois_partition(const CharacterTable& t);

// both orthogonality relations, degree sum, linear character count; throws on
// any failure
void verify_character_table(const CharacterTable& t);

} // namespace qga
