#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oml {

// Operation families. Index 0 of Join and Meet are the lattice primitives;
// every other (family, index) pair is derived and has an expansion rule.
enum class Family : std::uint8_t { Join, Meet, Implication, Identity };

struct OpCode {
  Family family = Family::Join;
  std::uint8_t index = 0;  // 0..5

  static constexpr OpCode join(int i = 0) { return {Family::Join, static_cast<std::uint8_t>(i)}; }
  static constexpr OpCode meet(int i = 0) { return {Family::Meet, static_cast<std::uint8_t>(i)}; }
  static constexpr OpCode implication(int i) {
    return {Family::Implication, static_cast<std::uint8_t>(i)};
  }
  static constexpr OpCode identity(int i) {
    return {Family::Identity, static_cast<std::uint8_t>(i)};
  }

  constexpr bool primitive() const {
    return index == 0 && (family == Family::Join || family == Family::Meet);
  }
  // Dense code 0..23, family-major.
  constexpr int code() const { return static_cast<int>(family) * 6 + index; }
  static constexpr OpCode from_code(int c) {
    return {static_cast<Family>(c / 6), static_cast<std::uint8_t>(c % 6)};
  }

  friend constexpr bool operator==(OpCode, OpCode) = default;
};

inline constexpr int kOpCodeCount = 24;

// ASCII spelling: "v", "^", ">i", "ui", "ni", "=i".
std::string op_symbol(OpCode op);

// Parses a single operator token such as "u3", ">1", "I", "v". Throws
// std::invalid_argument on anything else.
OpCode parse_op_symbol(std::string_view token);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Immutable lattice term. Copies share structure.
class Expr {
 public:
  enum class Kind : std::uint8_t { Variable, Constant, Negation, Binary };

  static Expr variable(char name);
  static Expr zero();
  static Expr one();
  static Expr negation(Expr child);
  static Expr binary(OpCode op, Expr left, Expr right);

  Kind kind() const;
  char name() const;     // Variable
  bool is_one() const;   // Constant
  OpCode op() const;     // Binary
  const Expr& child() const;  // Negation
  const Expr& left() const;   // Binary
  const Expr& right() const;  // Binary

  // Structural equality; double negations are significant.
  friend bool operator==(const Expr& x, const Expr& y);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Expr parse(std::string_view text);
std::string render(const Expr& e);

// Rewrites every derived operation into {negation, join, meet} and removes
// double negations.
Expr expand(const Expr& e);

// Negation that cancels an existing top-level negation.
Expr negate_simplified(const Expr& e);

// Replaces variables by expressions; names without a binding are kept.
Expr substitute(const Expr& e, char name, const Expr& value);

// Replaces the operation of every binary node.
Expr with_op(const Expr& e, OpCode op);

// Sorted distinct variable names.
std::vector<char> variables(const Expr& e);

int variable_occurrences(const Expr& e);
int negation_count(const Expr& e);

}  // namespace oml
