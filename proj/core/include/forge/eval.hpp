#pragma once

#include <cstddef>

#include "forge/expr.hpp"
#include "forge/natural.hpp"

namespace forge {

// Expressions denote towers; a bit-size cap turns nontermination-by-size
// into a clean ResourceLimitError. The process default is 2^20 bits and can
// be overridden (the CLI wires FORMULA_FORGE_MAX_BITS to it).
struct EvalLimits {
  std::size_t max_bits = 1u << 20;
};

std::size_t default_eval_bit_cap();
void set_default_eval_bit_cap(std::size_t bits);

// E(1)=1, E(a+b)=E(a)+E(b), E(a*b)=E(a)*E(b), E(a^b)=E(a)^E(b).
// Shared subterms are evaluated once per call. Throws ResourceLimitError if
// the result (or a power about to be raised) would exceed the bit cap.
Natural evaluate(const Expr* e, const EvalLimits& limits);
Natural evaluate(const Expr* e);

}  // namespace forge
