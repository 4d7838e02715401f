#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oml/expr.hpp"

namespace oml {

// MO2 elements in the fixed order used for canonical indexing.
enum class Mo2 : std::uint8_t { Bottom, X, XPrime, Y, YPrime, Top };

inline constexpr int kMo2Size = 6;

Mo2 mo2_complement(Mo2 p);
Mo2 mo2_join(Mo2 p, Mo2 q);
Mo2 mo2_meet(Mo2 p, Mo2 q);
const char* mo2_name(Mo2 p);

// Boolean-part atoms, bit i of the characteristic vector.
enum BooleanAtom : std::uint8_t {
  kAtomAB = 1u << 0,       // a ∧ b
  kAtomABPrime = 1u << 1,  // a ∧ b'
  kAtomAPrimeB = 1u << 2,  // a' ∧ b
  kAtomAPrimeBPrime = 1u << 3,
};

// Element of the free OML on generators a, b, as a pair (2^4 part, MO2 part).
struct F2Element {
  std::uint8_t boolean_part = 0;  // 4-bit characteristic vector
  Mo2 mo2_part = Mo2::Bottom;

  // Dense position 0..95 ordered by (boolean_part, mo2_part).
  constexpr int ordinal() const { return boolean_part * kMo2Size + static_cast<int>(mo2_part); }
  static constexpr F2Element from_ordinal(int k) {
    return {static_cast<std::uint8_t>(k / kMo2Size), static_cast<Mo2>(k % kMo2Size)};
  }

  friend constexpr bool operator==(F2Element, F2Element) = default;
};

inline constexpr int kF2Size = 96;

struct F2Lattice {
  using value_type = F2Element;
  F2Element neg(F2Element x) const;
  F2Element join(F2Element x, F2Element y) const;
  F2Element meet(F2Element x, F2Element y) const;
  static F2Element generator_a();
  static F2Element generator_b();
  static F2Element bottom();
  static F2Element top();
};

class ThirdVariableError : public std::invalid_argument {
 public:
  explicit ThirdVariableError(char name);
  char name() const { return name_; }

 private:
  char name_;
};

F2Element eval_f2(const Expr& e);

struct CanonicalForm {
  int index = 0;  // 1..96, ordered by (boolean_part, mo2_part)
  F2Element element;
  std::string text;  // minimal expression over {v, ^, -}
  std::optional<int> beran_xref;
};

// Closure of the generators under complement and join, numbered and given
// minimal texts. Throws std::logic_error if the closure is not 96 elements.
std::vector<CanonicalForm> build_canonical_table();

// Process-wide table, built once on first use.
std::span<const CanonicalForm> canonical_table();

const CanonicalForm& canonical_form(F2Element e);
const CanonicalForm& reduce(const Expr& e);
bool equal_oml(const Expr& lhs, const Expr& rhs);

// Beran Table-1 number where the published family lists pin it.
std::optional<int> beran_number(F2Element e);

// The classical element (built from a classical expression) sharing the
// Boolean part of e.
F2Element classical_counterpart(F2Element e);
bool is_classical(F2Element e);

// Dense operation tables over F2 ordinals, shared by the enumerator.
struct F2Tables {
  std::array<std::uint8_t, kF2Size> neg{};
  // op code -> 96x96 table
  std::array<std::array<std::uint8_t, kF2Size * kF2Size>, kOpCodeCount> binary{};
};

const F2Tables& f2_tables();

}  // namespace oml
