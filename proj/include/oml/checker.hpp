#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oml/expr.hpp"
#include "oml/models.hpp"

namespace oml {

struct Atom {
  enum class Kind { Equal, Leq, Commutes };
  Kind kind = Kind::Equal;
  // For Commutes both sides are variables.
  Expr lhs = Expr::zero();
  Expr rhs = Expr::zero();

  static Atom equal(Expr l, Expr r) { return {Kind::Equal, std::move(l), std::move(r)}; }
  static Atom leq(Expr l, Expr r) { return {Kind::Leq, std::move(l), std::move(r)}; }
  static Atom commutes(char x, char y) { return {Kind::Commutes, Expr::variable(x), Expr::variable(y)}; }
};

// Horn condition hypotheses => conclusion, universally closed over variables.
struct Condition {
  std::vector<char> variables;
  std::vector<Atom> hypotheses;
  Atom conclusion;
};

// Variables are collected from the atoms and sorted.
Condition make_condition(std::vector<Atom> hypotheses, Atom conclusion);
Condition make_equation(const Expr& lhs, const Expr& rhs);

// Syntax: "h1 & h2 => concl" with atoms "l = r", "l < r" (or "l <= r") and
// "xCy". Without "=>" the text is a single conclusion. Throws ParseError.
Condition parse_condition(std::string_view text);
std::string render_condition(const Condition& c);

// Third commutation form: x = (x ^ y) v (x ^ y'). Debug builds also evaluate
// the other two forms on orthomodular models and throw std::logic_error if
// they disagree.
bool commutes(const OrthoModel& m, Element x, Element y);

// The three commutation forms: the four-term join is 1, x ^ (x' v y) <= y,
// and x = (x ^ y) v (x ^ y').
std::array<bool, 3> commutation_forms(const OrthoModel& m, Element x, Element y);

// All 24 binary operation tables of a model, built once and shared by checks.
class ModelOps {
 public:
  explicit ModelOps(const OrthoModel& m);
  const OrthoModel& model() const { return *model_; }
  int size() const { return model_->size(); }
  Element neg(Element x) const { return neg_[x]; }
  Element apply(OpCode op, Element x, Element y) const { return tables_[op.code()][x * size() + y]; }
  const Element* table(OpCode op) const { return tables_[op.code()].data(); }

 private:
  const OrthoModel* model_;
  std::vector<Element> neg_;
  std::array<std::vector<Element>, kOpCodeCount> tables_;
};

struct CheckResult {
  bool pass = true;
  // One element per declared variable, for the lexicographically first
  // failing valuation.
  std::optional<std::vector<Element>> counterexample;
};

// Exhaustive check over all valuations, first variable most significant.
// Throws std::invalid_argument if an atom uses an undeclared variable.
CheckResult check_horn(const ModelOps& ops, const Condition& c);
CheckResult check_horn(const OrthoModel& m, const Condition& c);

// Throws std::invalid_argument if the condition has hypotheses.
CheckResult check_equation(const OrthoModel& m, const Condition& eq);

std::string format_valuation(const OrthoModel& m, const Condition& c, const std::vector<Element>& valuation);

using DistribTuple = std::array<int, 5>;

// Every (i, j, k, l, m) with a u_i (b n_j c) = (a u_k b) n_l (a u_m c) on the
// model; with dual, the same pattern with joins and meets interchanged.
std::vector<DistribTuple> scan_mixed_distributivity(const OrthoModel& m, bool dual = false);

// Single-threaded reference implementations.
namespace serial {
CheckResult check_horn(const ModelOps& ops, const Condition& c);
std::vector<DistribTuple> scan_mixed_distributivity(const OrthoModel& m, bool dual = false);
}  // namespace serial

}  // namespace oml
