#pragma once

#include <map>
#include <random>
#include <string>

#include "oml/expr.hpp"
#include "oml/ops.hpp"

namespace oml::testing {

// Direct evaluation through ops.hpp, independent of expand() and the checker.
template <class L>
typename L::value_type eval(const L& l, const Expr& e, const std::map<char, typename L::value_type>& env,
                            typename L::value_type zero, typename L::value_type one) {
  switch (e.kind()) {
    case Expr::Kind::Variable: return env.at(e.name());
    case Expr::Kind::Constant: return e.is_one() ? one : zero;
    case Expr::Kind::Negation: return l.neg(eval(l, e.child(), env, zero, one));
    case Expr::Kind::Binary:
      return apply_op(l, e.op(), eval(l, e.left(), env, zero, one), eval(l, e.right(), env, zero, one));
  }
  return zero;
}

// Random term over the given letters with up to `depth` nested binary nodes.
inline Expr random_expr(std::mt19937& rng, int depth, const std::string& letters, bool any_op = true) {
  std::uniform_int_distribution<int> coin(0, 9);
  Expr e = Expr::zero();
  if (depth == 0 || coin(rng) < 2) {
    int k = std::uniform_int_distribution<int>(0, static_cast<int>(letters.size()) - 1)(rng);
    e = Expr::variable(letters[k]);
  } else {
    int code = any_op ? std::uniform_int_distribution<int>(0, 23)(rng) : (coin(rng) < 5 ? 0 : 6);
    Expr l = random_expr(rng, depth - 1, letters, any_op);
    Expr r = random_expr(rng, depth - 1, letters, any_op);
    e = Expr::binary(OpCode::from_code(code), l, r);
  }
  return coin(rng) < 3 ? Expr::negation(e) : e;
}

}  // namespace oml::testing
