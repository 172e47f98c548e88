#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qga {

struct VerifyOptions {
  int exhaustive_limit = 512;        // full associativity check up to this order
  std::uint64_t samples = 1000000;   // sampled triples above the limit
  std::uint64_t seed = 0x51ab1e;
};

// Finite group on elements 0..n-1 given by its multiplication table.
// Element 0 is the identity.  Instances are immutable and cheap to copy.
class Group {
public:
  Group() = default;  // empty placeholder; only from_table yields a usable group

  // table[a*n + b] = a*b; verifies the table encodes a group
  static Group from_table(std::vector<int> flat_table, const VerifyOptions& opts = {});

  int order() const { return n_; }
  int mul(int a, int b) const { return (*table_)[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return (*inv_)[static_cast<std::size_t>(a)]; }
  int conj(int x, int g) const { return mul(mul(x, g), inv(x)); } // x g x^{-1}

  int power(int g, long k) const;
  int element_order(int g) const;
  long exponent() const;
  bool is_abelian() const;

private:
  int n_ = 0;
  std::shared_ptr<const std::vector<int>> table_;
  std::shared_ptr<const std::vector<int>> inv_;
};

struct Subgroup {
  std::vector<int> members;  // ascending, contains 0
  std::vector<char> mask;    // size |G|

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int g) const { return mask[static_cast<std::size_t>(g)] != 0; }
};

bool operator==(const Subgroup& a, const Subgroup& b);

struct ConjugacyPartition {
  std::vector<std::vector<int>> classes;  // each ascending; ordered by least member
  std::vector<int> class_of;              // element -> class index
  std::vector<int> representatives;       // least member per class
};

// closure of permutation generators on 0..degree-1 under composition;
// throws if the closure exceeds cap
Group close_generators(int degree, const std::vector<std::vector<int>>& generators,
                       int cap = 10000, const VerifyOptions& opts = {});

ConjugacyPartition conjugacy_classes(const Group& g);

Subgroup trivial_subgroup(const Group& g);
Subgroup full_subgroup(const Group& g);
Subgroup subgroup_closure(const Group& g, const std::vector<int>& gens);
Subgroup normal_closure(const Group& g, const std::vector<int>& gens);
bool is_normal(const Group& g, const Subgroup& h);
bool is_subgroup_subset(const Subgroup& inner, const Subgroup& outer);
Subgroup subgroup_join(const Group& g, const Subgroup& a, const Subgroup& b);

struct CharacteristicData {
  Subgroup center;
  Subgroup derived;
  Subgroup second_center;               // preimage of Z(G/Z)
  std::vector<Subgroup> lower_central;  // G = L1 >= L2 = [G,G] >= ...
  std::optional<int> nilpotency_class;  // empty if not nilpotent
};

CharacteristicData characteristic_subgroups(const Group& g);

struct QuotientResult {
  Group group;
  std::vector<int> projection;  // element of G -> element of G/N
};

QuotientResult quotient(const Group& g, const Subgroup& n);

struct AbelianInvariants {
  long exponent;
  std::map<long, long> count_of_order;  // order d -> #elements of order d, all d | exponent
};

AbelianInvariants abelian_invariants(const Group& g);  // requires abelian

// all normal subgroups, as joins of normal closures of conjugacy classes;
// sorted by (size, members).  Intended for small groups; throws above cap.
std::vector<Subgroup> normal_subgroups(const Group& g, std::size_t cap = 100000);

// minimal nontrivial normal subgroups
std::vector<Subgroup> minimal_normal_subgroups(const Group& g);

// all subgroups N with lower <= N <= upper, found inside the section
// upper/lower; lower must be normal in upper.  Sorted by (size, members);
// throws above cap.
std::vector<Subgroup> subgroups_between(const Group& g, const Subgroup& lower,
                                        const Subgroup& upper, std::size_t cap = 100000);

// the subgroup as a Group in its own right; index_map[i] = parent element of i
Group subgroup_as_group(const Group& g, const Subgroup& h, std::vector<int>* index_map = nullptr);

Group direct_product(const Group& a, const Group& b);

// basis of an abelian group as (element, order) pairs with G the direct sum
// of the cyclic groups generated by the elements
std::vector<std::pair<int, long>> abelian_basis(const Group& g);

} // namespace qga
