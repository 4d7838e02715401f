#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oml/expr.hpp"
#include "oml/freeoml.hpp"

namespace oml {

// 2^v * C(2v-1, n) * Catalan(v-1): expressions with v occurrences of a or b,
// v-1 binary nodes of one operation and n non-nested negations. Throws
// std::out_of_range unless v >= 2 and 0 <= n <= 2v-1.
std::uint64_t count_expressions(int v, int n);

class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class O6Filter { None, Pass, Fail };

struct SearchSpec {
  int v = 2;
  int n = 0;
  std::vector<OpCode> opset;
  // Keep only expressions with the same canonical form under every op.
  bool common_only = false;
  // Keep only expressions equal to the target (a two-variable expression)
  // in the free OML under every op.
  std::optional<Expr> target;
  // With a target, keep only results whose equation with the target passes
  // (or fails) on O6 when instantiated with the first op of the opset.
  O6Filter o6_filter = O6Filter::None;
  std::uint64_t ceiling = 20'000'000'000ULL;
};

struct Enumerated {
  Expr expr;  // instantiated with the first op of the opset
  std::vector<F2Element> forms;  // one per op in the opset
};

// Visits the expression space in a fixed order (tree shape, negation
// placement, leaf letters), evaluating the shapes in parallel. Throws
// SearchLimitError when the space exceeds the ceiling.
void enumerate(const SearchSpec& spec, const std::function<void(const Enumerated&)>& visit);
std::vector<Enumerated> enumerate_all(const SearchSpec& spec);

// Results at the first (v, n) level, sorted by rendered text.
struct MinimalResult {
  int v = 0;
  int n = 0;
  std::vector<Expr> raw;
  // Raw results with each a<->b swapped pair reduced to its textually
  // smaller member.
  std::vector<Expr> collapsed;
};

struct MinimalSearch {
  std::vector<OpCode> opset;
  int max_v = 7;
  O6Filter o6_filter = O6Filter::None;
};

// Searches levels in (v, n) order for expressions equal to the target under
// every op. Throws SearchLimitError when no level up to max_v has a result.
MinimalResult find_minimal(const Expr& target, const MinimalSearch& search);

// Swaps the letters a and b.
Expr swap_ab(const Expr& e);

// Single-threaded enumeration in the same order.
namespace serial {
void enumerate(const SearchSpec& spec, const std::function<void(const Enumerated&)>& visit);
}  // namespace serial

}  // namespace oml
