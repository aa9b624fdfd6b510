#pragma once

#include <cstdint>
#include <vector>

#include "forge/counters.hpp"
#include "forge/expr_set.hpp"

namespace forge {

// State carried across Zeta iterations: prime-encoding expressions P_k and
// natural-encoding expressions Ň_k, both ascending by value. Initially
// P_0 = {x}, Ň_0 = {1, x}. Every element is (identically) the SCF encoding
// of its value; after improved iteration k the values of Ň_k are exactly
// 1..2^(k+1).
struct ZetaState {
  std::size_t k = 0;
  ExprSet primes;
  ExprSet naturals;
};

ZetaState zeta_initial();

// Basic recursion: N_{k+1} = all products over p in P_k of a factor from
// {1} ∪ p^{Ň_k}, keeping values <= value_cap; every gap of two between
// consecutive sorted values adjoins the midpoint as 1 + (expression of the
// lower endpoint), asserted prime (SoundnessError otherwise). The relation
// is unbounded, hence the caller-supplied cap.
ZetaState zeta_step_basic(const ZetaState& state, std::uint64_t value_cap,
                          ManipulationCounters* counters = nullptr);

// Window contribution of one prime q in P_k: expressions q^n * m with n a
// value of Ň_k, q^n <= 2^(k+2), and m a product over primes p < q with
// exponents from {0} ∪ Ň_k, keeping values in (2^(k+1), 2^(k+2)]. Partial
// products are pruned at 2^(k+2); primes extend in descending order.
ExprSet zeta_window(const Expr* q, const ZetaState& state,
                    ManipulationCounters* counters = nullptr);

// Improved (windowed) step: union Ň_k with every window contribution, sort,
// adjoin gap-of-two midpoints (asserted prime), and require the result to
// cover exactly 1..2^(k+2) (CompletenessError otherwise).
ZetaState zeta_step_improved(const ZetaState& state,
                             ManipulationCounters* counters = nullptr);

struct SiftIteration {
  std::size_t bits;             // coverage is 1..2^bits after this iteration
  std::uint64_t coverage;       // 2^bits
  std::uint64_t primes;         // |P| so far
  std::uint64_t manipulations;  // cumulative counter total
};

struct SiftOptions {
  std::size_t max_bits = 22;
};

struct SiftResult {
  std::vector<std::uint64_t> primes;  // ascending primes <= 2^bits
  std::vector<SiftIteration> iterations;
  ManipulationCounters counters;
  std::uint64_t adjunction_checks = 0;  // primality assertions performed
};

// Runs improved steps until Ň covers 1..2^bits and returns the prime values
// plus per-iteration counter readings for the complexity curve.
SiftResult sift_primes(std::size_t bits, const SiftOptions& opts = {});

// A pair of SCF expressions with coprime evaluated values (disjoint prime
// support by construction); denominators >= 1.
struct RationalExpr {
  const Expr* numerator;
  const Expr* denominator;
  std::uint64_t num_value;
  std::uint64_t den_value;
};

// Products over p in P_k of a factor from (1/p)^{Ň_k} ∪ {1} ∪ p^{Ň_k};
// negative choices accumulate into the denominator. Entries with numerator
// and denominator values <= value_cap, sorted by (denominator, numerator);
// prime-exponent vectors are unique so duplicates are impossible.
std::vector<RationalExpr> rationals(const ZetaState& state, std::uint64_t value_cap,
                                    ManipulationCounters* counters = nullptr);

}  // namespace forge
