#pragma once

#include "oml/expr.hpp"

namespace oml {

// Direct evaluation of every operation code over a lattice L that provides
// neg/join/meet on L::value_type. This is intentionally independent of
// expand(), which works on syntax; tests compare the two.
template <class L>
typename L::value_type implication(const L& l, int i, typename L::value_type a,
                                   typename L::value_type b) {
  switch (i) {
    case 0:
      return l.join(l.neg(a), b);
    case 1:
      return l.join(l.neg(a), l.meet(a, b));
    case 2:  // b' ->1 a'
      return l.join(b, l.meet(l.neg(b), l.neg(a)));
    case 3:
      return l.join(l.join(l.meet(l.neg(a), b), l.meet(l.neg(a), l.neg(b))),
                    l.meet(a, l.join(l.neg(a), b)));
    case 4:  // b' ->3 a'
      return l.join(l.join(l.meet(b, l.neg(a)), l.meet(b, a)),
                    l.meet(l.neg(b), l.join(b, l.neg(a))));
    default:
      return l.join(l.join(l.meet(a, b), l.meet(l.neg(a), b)), l.meet(l.neg(a), l.neg(b)));
  }
}

template <class L>
typename L::value_type apply_op(const L& l, OpCode op, typename L::value_type a,
                                typename L::value_type b) {
  switch (op.family) {
    case Family::Join:
      return op.index == 0 ? l.join(a, b) : implication(l, op.index, l.neg(a), b);
    case Family::Meet:
      return op.index == 0 ? l.meet(a, b) : l.neg(implication(l, op.index, a, l.neg(b)));
    case Family::Implication:
      return implication(l, op.index, a, b);
    case Family::Identity:
      return l.meet(implication(l, op.index, a, b), implication(l, 0, b, a));
  }
  return a;
}

}  // namespace oml
