#pragma once

#include "qga/camina.hpp"
#include "qga/char_table.hpp"
#include "qga/group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qga {

// element of the rational group algebra, dense coefficient vector over G
class AlgebraElement {
public:
  AlgebraElement() = default;
  explicit AlgebraElement(Group g);

  const Group& group() const { return group_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational& at(int g) { return coeffs_[static_cast<std::size_t>(g)]; }
  const Rational& at(int g) const { return coeffs_[static_cast<std::size_t>(g)]; }

  bool is_zero() const;
  int support_size() const;

  static AlgebraElement one(const Group& g);
  static AlgebraElement basis(const Group& g, int x);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { a += b; return a; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { a -= b; return a; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { a *= s; return a; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);  // convolution
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  bool is_idempotent() const;
  bool is_central() const;  // g e g^{-1} = e for every g

private:
  Group group_;
  std::vector<Rational> coeffs_;
};

// averaged subgroup sum: (1/|X|) * sum of the members
AlgebraElement hat(const Group& g, const std::vector<int>& members);

// hat(N) if N = H; otherwise hat(N) * prod over minimal normal subgroups D/N
// of H/N of (1 - hat(D)), all computed inside the ambient group of H
AlgebraElement epsilon(const Group& ambient, const Subgroup& h, const Subgroup& n);

// rational-character idempotent of the Galois class containing char_index:
// (chi(1)/|G|) sum_g tr(chi(g)) g^{-1}
AlgebraElement rational_idempotent(const CharacterTable& t, int char_index);

// closed-form prediction for the same idempotent from subgroup data alone;
// empty when the group shape is outside the supported cases
std::optional<AlgebraElement> predicted_idempotent(const CharacterTable& t, int char_index,
                                                   const CaminaProfile& prof);

// dimension over Q of the two-sided ideal QG * e (e central idempotent):
// exact integer rank of the translation matrix, cross-checked modulo two
// random primes
long component_dimension(const AlgebraElement& e, std::uint64_t seed = 0xd1a90);

struct IdempotentCheck {
  int char_index = 0;            // first member of the Galois class
  int degree = 0;
  long conductor = 1;
  bool idempotent = false;
  bool central = false;
  long dimension = 0;            // rank of QG e
  long expected_dimension = 0;   // degree^2 * phi(conductor)
  bool has_prediction = false;
  bool prediction_matches = false;
  std::string prediction_kind;   // which subgroup pair the closed form used
};

struct CompleteSetReport {
  std::vector<IdempotentCheck> checks;
  bool pairwise_orthogonal = false;
  bool sums_to_one = false;
  bool all_pass = false;
};

// one idempotent per Galois class: all axioms, dimensions, and closed-form
// comparisons; threads > 1 parallelizes the heavy loops
CompleteSetReport verify_complete_set(const CharacterTable& t, const CaminaProfile& prof,
                                      int threads = 1, std::uint64_t seed = 0xd1a90);

std::string idempotent_to_json(const AlgebraElement& e, int char_index);

} // namespace qga
