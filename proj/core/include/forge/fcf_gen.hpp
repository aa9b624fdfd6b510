#pragma once

#include <cstdint>

#include "forge/counters.hpp"
#include "forge/expr_set.hpp"

namespace forge {

// One level of the subset-sum set recurrence: N_0 = {1},
// N_{k+1} = all nonempty-subset sums over {1} ∪ x^{N_k}. After each full
// step the evaluated values are exactly 1..(2^(|N_k|+1) - 1) and every
// element is the FCF encoding of its value.
struct FcfLevel {
  std::size_t index = 0;
  ExprSet expressions;
};

FcfLevel fcf_initial();

struct FcfGenOptions {
  // The level after 65535 is astronomically large; the cap converts that
  // into a clean error.
  std::uint64_t output_cap = 1ull << 24;
};

// One full step of the recurrence. Base terms are [1] ++ [x^f] with the
// level's elements as exponents; subsets are enumerated in binary-counter
// order over the value-ascending base list, so output is produced already
// sorted (subset-sum value == counter value).
FcfLevel fcf_step(const FcfLevel& level, const FcfGenOptions& opts = {},
                  ManipulationCounters* counters = nullptr);

struct FcfGenerateResult {
  ExprSet expressions;  // values exactly 1..target
  std::size_t iterations = 0;
  ManipulationCounters counters;
};

// Iterates fcf_step from {1} until coverage reaches target; the final step
// stops at target instead of completing (intermediate levels are always
// full, their elements feed the next base list).
FcfGenerateResult fcf_generate(std::uint64_t target, const FcfGenOptions& opts = {});

}  // namespace forge
