#pragma once

#include <cstdint>
#include <vector>

#include "forge/eval.hpp"
#include "forge/expr.hpp"
#include "forge/natural.hpp"

namespace forge {

enum class CanonicalForm { Fcf, Scf };

struct PrimePower {
  std::uint64_t prime;
  std::uint64_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Ascending primes, exponents >= 1; the weighted product is the factored
// value. factor(1) is empty.
using Factorization = std::vector<PrimePower>;

// Deterministic trial division (odd candidates after 2), exact for n < 2^64;
// ResourceLimitError above that.
bool is_prime(std::uint64_t n);
bool is_prime(const Natural& n);
Factorization factor(std::uint64_t n);
Factorization factor(const Natural& n);

// First canonical form: hereditary base-2. 1 for n=1, otherwise the sum of
// x^(encode_fcf(e)) over set-bit positions e >= 1 (position 1 emits bare x),
// terms strictly descending by value, plus a trailing 1 when n is odd.
const Expr* encode_fcf(const Natural& n);

// Second canonical form: recursive prime factorization. For
// n = 2^g * prod p_k^{g_k}, the product of (1 + encode_scf(p_k - 1)) raised
// to encode_scf(g_k), odd primes ascending, followed by x^(encode_scf(g))
// last when g >= 1. Exponent value 1 emits the bare base.
const Expr* encode_scf(const Natural& n);

bool is_fcf(const Expr* e);
bool is_scf(const Expr* e);

// encode(evaluate(e)) in the chosen form; value-preserving and idempotent.
const Expr* normalize(const Expr* e, CanonicalForm form);

// Evaluation-based equivalence.
bool equivalent(const Expr* a, const Expr* b);

struct ShortestOptions {
  std::size_t max_table_entries = 1u << 20;
};

// Bounded brute-force search for a minimal-LEAVES expression evaluating to
// n, exhaustive over smart-constructed trees with at most max_leaves leaves
// (practical budgets are <= 12). Returns nullptr when unreachable. Ties are
// broken by the pinned enumeration order: budget ascending, op in (^, *, +),
// left budget ascending, operand values ascending.
const Expr* shortest_expr(const Natural& n, std::size_t max_leaves,
                          const ShortestOptions& opts = {});

}  // namespace forge
