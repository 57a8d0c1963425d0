#pragma once

#include <ostream>

#include "sympow/dga.hpp"
#include "sympow/groupring.hpp"

namespace sympow::groupring {
inline void PrintTo(const GroupRingElement& a, std::ostream* os) { *os << a.to_string(); }
}  // namespace sympow::groupring

namespace sympow::dga {
inline void PrintTo(const Element& a, std::ostream* os) { *os << a.to_string(); }
inline void PrintTo(const Monomial& m, std::ostream* os) { *os << "{" << m.mask << ", " << m.gamma << "}"; }
}  // namespace sympow::dga

namespace sympow::testing {

using groupring::GroupRingElement;
using groupring::RingShape;

inline GroupRingElement var(const RingShape& shape, int index, int power = 1) {
  return GroupRingElement::generator(shape, index, power);
}
inline GroupRingElement x(const RingShape& shape, int i, int power = 1) { return var(shape, i - 1, power); }
inline GroupRingElement y(const RingShape& shape, int i, int power = 1) {
  return var(shape, shape.rank + i - 1, power);
}
inline GroupRingElement c(const RingShape& shape, long v) { return GroupRingElement::constant(shape, v); }

}  // namespace sympow::testing
