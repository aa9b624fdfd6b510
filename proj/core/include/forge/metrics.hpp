#pragma once

#include "forge/expr.hpp"
#include "forge/natural.hpp"

namespace forge {

// The source material never fixes a notion of "length", so all three are
// provided and the stats command reports each:
//   Chars  — length of the prefix rendering with x expanded and
//            single-character tokens (= Leaves + Gates),
//   Leaves — count of 1-leaves after expanding x,
//   Gates  — fan-in-two operations after expanding x and binarizing n-ary
//            nodes left-to-right.
enum class SizeMetric { Chars, Leaves, Gates };

Natural size(const Expr* e, SizeMetric metric);

}  // namespace forge
