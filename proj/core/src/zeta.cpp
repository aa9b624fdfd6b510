#include "forge/zeta.hpp"

#include <algorithm>
#include <string>

#include "forge/canonical.hpp"
#include "forge/errors.hpp"

namespace forge {
namespace {

struct ChosenFactor {
  std::uint64_t prime_value;
  const Expr* prime_expr;
  std::uint64_t exp_value;
  const Expr* exp_expr;
};

// Assemble a product in canonical SCF order: odd-prime bases ascending,
// the power-of-two factor last.
const Expr* assemble_product(std::vector<ChosenFactor> factors,
                             ManipulationCounters* counters) {
  std::sort(factors.begin(), factors.end(), [](const ChosenFactor& a, const ChosenFactor& b) {
    bool a_two = a.prime_value == 2, b_two = b.prime_value == 2;
    if (a_two != b_two) return b_two;  // the 2-power sorts last
    return a.prime_value < b.prime_value;
  });
  std::vector<const Expr*> parts;
  parts.reserve(factors.size());
  for (const ChosenFactor& f : factors) {
    parts.push_back(f.exp_value == 1 ? f.prime_expr : mk_power(f.prime_expr, f.exp_expr));
    if (counters) ++counters->assembly_steps;
  }
  if (counters) ++counters->assembly_steps;
  if (parts.empty()) return mk_one();
  if (parts.size() == 1) return parts[0];
  return mk_product(parts);
}

// p^e if it stays <= budget, else 0. e is small whenever the result fits.
std::uint64_t pow_within(std::uint64_t p, std::uint64_t e, std::uint64_t budget) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (acc > budget / p) return 0;
    acc *= p;
  }
  return acc;
}

// Index of the last prime in primes[0..limit) with value <= budget, or
// SIZE_MAX when none fits.
std::size_t last_fitting_prime(const ExprSet& primes, std::size_t limit,
                               std::uint64_t budget) {
  std::size_t lo = 0, hi = limit;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (primes[mid].value <= budget)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo == 0 ? static_cast<std::size_t>(-1) : lo - 1;
}

// Depth-first product enumeration over primes descending with
// partial-product pruning. At each node every prime below the current one
// is a candidate (a failing large prime says nothing about smaller ones, so
// the descending scan is always full length; it is counted in bulk and the
// fitting range is located by binary search). Exponents come from Ň_k,
// tried ascending until the first over-budget value.
struct ProductSearch {
  const ExprSet& primes;
  const ExprSet& naturals;
  std::uint64_t lower;  // emit values v with lower < v <= upper
  std::uint64_t upper;
  std::vector<ValuedExpr>* out;
  ManipulationCounters* counters;

  std::vector<ChosenFactor> chosen;

  void extend(std::uint64_t partial, std::size_t prime_limit) {
    if (partial > lower) {
      out->push_back({partial, assemble_product(chosen, counters)});
    }
    if (counters) counters->assembly_steps += prime_limit;  // descending candidate scan
    if (prime_limit == 0) return;
    std::size_t max_fit = last_fitting_prime(primes, prime_limit, upper / partial);
    if (max_fit == static_cast<std::size_t>(-1)) return;
    for (std::size_t j = 0; j <= max_fit; ++j) {
      const ValuedExpr& p = primes[j];
      std::uint64_t budget = upper / partial;
      for (const ValuedExpr& n : naturals) {
        if (counters) ++counters->assembly_steps;  // exponent try
        std::uint64_t pe = pow_within(p.value, n.value, budget);
        if (pe == 0) break;  // larger exponents only grow
        chosen.push_back({p.value, p.expr, n.value, n.expr});
        extend(partial * pe, j);
        chosen.pop_back();
      }
    }
  }
};

void check_adjoined_prime(std::uint64_t v) {
  if (!is_prime(v))
    throw SoundnessError("gap adjunction produced composite " + std::to_string(v));
}

// Scan sorted values for gaps of exactly two and adjoin midpoints as
// 1 + (expression of the lower endpoint), each asserted prime.
std::vector<ValuedExpr> adjoin_gap_midpoints(const std::vector<ValuedExpr>& sorted,
                                             ManipulationCounters* counters) {
  std::vector<ValuedExpr> adjoined;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].value - sorted[i - 1].value == 2) {
      std::uint64_t v = sorted[i - 1].value + 1;
      check_adjoined_prime(v);
      adjoined.push_back({v, mk_sum({sorted[i - 1].expr, mk_one()})});
      if (counters) ++counters->assembly_steps;
    }
  }
  return adjoined;
}

std::vector<ValuedExpr> merge_sorted(const std::vector<ValuedExpr>& a,
                                     const std::vector<ValuedExpr>& b) {
  std::vector<ValuedExpr> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].value < b[j].value)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].value < a[i].value) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i++]);  // equal values carry identical expressions
      ++j;
    }
  }
  return out;
}

void sort_by_value(std::vector<ValuedExpr>& v) {
  std::sort(v.begin(), v.end(),
            [](const ValuedExpr& a, const ValuedExpr& b) { return a.value < b.value; });
}

}  // namespace

ZetaState zeta_initial() {
  ZetaState s;
  s.k = 0;
  s.primes = ExprSet({{2, mk_x()}});
  s.naturals = ExprSet({{1, mk_one()}, {2, mk_x()}});
  return s;
}

ExprSet zeta_window(const Expr* q, const ZetaState& state, ManipulationCounters* counters) {
  std::size_t q_index = state.primes.size();
  for (std::size_t i = 0; i < state.primes.size(); ++i) {
    if (state.primes[i].expr == q) {
      q_index = i;
      break;
    }
  }
  if (q_index == state.primes.size())
    throw DomainError("zeta_window: q must be an element of P_k");
  const std::uint64_t qv = state.primes[q_index].value;

  const std::uint64_t lower = 1ull << (state.k + 1);
  const std::uint64_t upper = 1ull << (state.k + 2);

  // Every n in Ň_k is an exponent candidate; the guard q^n <= 2^(k+2)
  // admits only a short prefix. The scan is counted in bulk and only the
  // admitted prefix does real work.
  if (counters) counters->assembly_steps += state.naturals.size();

  std::vector<ValuedExpr> out;
  ProductSearch search{state.primes, state.naturals, lower, upper, &out, counters, {}};
  for (const ValuedExpr& n : state.naturals) {
    std::uint64_t q_pow = pow_within(qv, n.value, upper);
    if (q_pow == 0) break;
    search.chosen.clear();
    search.chosen.push_back({qv, q, n.value, n.expr});
    search.extend(q_pow, q_index);
  }
  sort_by_value(out);
  return ExprSet(std::move(out));
}

ZetaState zeta_step_improved(const ZetaState& state, ManipulationCounters* counters) {
  std::uint64_t before = Registry::instance().insertions();
  std::vector<ValuedExpr> window;
  for (const ValuedExpr& q : state.primes) {
    ExprSet part = zeta_window(q.expr, state, counters);
    auto taken = std::move(part).take();
    window.insert(window.end(), taken.begin(), taken.end());
  }
  sort_by_value(window);

  // Ň_k covers 1..2^(k+1) and the window sits strictly above it, so the
  // concatenation is already sorted.
  std::vector<ValuedExpr> merged = state.naturals.entries();
  merged.insert(merged.end(), window.begin(), window.end());

  std::vector<ValuedExpr> adjoined = adjoin_gap_midpoints(merged, counters);
  std::vector<ValuedExpr> naturals = merge_sorted(merged, adjoined);

  const std::uint64_t want = 1ull << (state.k + 2);
  if (naturals.size() != want)
    throw CompletenessError("improved step covers " + std::to_string(naturals.size()) +
                            " of " + std::to_string(want) + " values");
  for (std::size_t i = 0; i < naturals.size(); ++i) {
    if (naturals[i].value != i + 1)
      throw CompletenessError("improved step left a hole at " + std::to_string(i + 1));
  }

  std::vector<ValuedExpr> primes = state.primes.entries();
  primes.insert(primes.end(), adjoined.begin(), adjoined.end());

  ZetaState next;
  next.k = state.k + 1;
  next.primes = ExprSet(std::move(primes));
  next.naturals = ExprSet(std::move(naturals));
  if (counters) counters->new_nodes += Registry::instance().insertions() - before;
  return next;
}

ZetaState zeta_step_basic(const ZetaState& state, std::uint64_t value_cap,
                          ManipulationCounters* counters) {
  if (value_cap == 0) throw DomainError("zeta_step_basic: value cap must be >= 1");
  std::uint64_t before = Registry::instance().insertions();

  // Same descending-prime product search over all of P_k, emitting every
  // product value <= cap (including the empty choice, 1). The relation is
  // unbounded, hence the caller-supplied cap.
  std::vector<ValuedExpr> out;
  ProductSearch search{state.primes, state.naturals, 0, value_cap, &out, counters, {}};
  search.extend(1, state.primes.size());
  sort_by_value(out);

  std::vector<ValuedExpr> adjoined = adjoin_gap_midpoints(out, counters);
  std::vector<ValuedExpr> naturals = merge_sorted(out, adjoined);
  std::vector<ValuedExpr> primes = merge_sorted(state.primes.entries(), adjoined);

  ZetaState next;
  next.k = state.k + 1;
  next.primes = ExprSet(std::move(primes));
  next.naturals = ExprSet(std::move(naturals));
  if (counters) counters->new_nodes += Registry::instance().insertions() - before;
  return next;
}

SiftResult sift_primes(std::size_t bits, const SiftOptions& opts) {
  if (bits == 0) throw DomainError("sift_primes: bits must be >= 1");
  if (bits > opts.max_bits)
    throw DomainError("sift_primes: bits exceeds the configured maximum of " +
                      std::to_string(opts.max_bits));

  SiftResult result;
  std::uint64_t before = Registry::instance().insertions();
  ZetaState state = zeta_initial();
  while (state.k + 1 < bits) {
    // Every prime gained by a step went through exactly one adjunction
    // primality assertion inside it.
    std::size_t primes_before = state.primes.size();
    state = zeta_step_improved(state, &result.counters);
    result.adjunction_checks += state.primes.size() - primes_before;
    std::uint64_t manip = result.counters.assembly_steps +
                          (Registry::instance().insertions() - before);
    result.iterations.push_back(
        {state.k + 1, 1ull << (state.k + 1), state.primes.size(), manip});
  }
  result.counters.new_nodes = Registry::instance().insertions() - before;
  result.primes.reserve(state.primes.size());
  for (const ValuedExpr& p : state.primes) result.primes.push_back(p.value);
  return result;
}

std::vector<RationalExpr> rationals(const ZetaState& state, std::uint64_t value_cap,
                                    ManipulationCounters* counters) {
  if (value_cap == 0) throw DomainError("rationals: value cap must be >= 1");

  std::vector<RationalExpr> out;
  std::vector<ChosenFactor> num_factors, den_factors;

  // Per prime, descending: exponent 0, or +e into the numerator, or -e into
  // the denominator, exponents from Ň_k, both sides value-capped.
  auto walk = [&](auto&& self, std::size_t prime_limit, std::uint64_t num_v,
                  std::uint64_t den_v) -> void {
    if (prime_limit == 0) {
      out.push_back({assemble_product(num_factors, counters),
                     assemble_product(den_factors, counters), num_v, den_v});
      return;
    }
    const ValuedExpr& p = state.primes[prime_limit - 1];
    self(self, prime_limit - 1, num_v, den_v);  // exponent 0
    for (int side = 0; side < 2; ++side) {
      std::uint64_t budget = (side == 0 ? value_cap / num_v : value_cap / den_v);
      std::vector<ChosenFactor>& factors = side == 0 ? num_factors : den_factors;
      for (const ValuedExpr& n : state.naturals) {
        if (counters) ++counters->assembly_steps;
        std::uint64_t pe = pow_within(p.value, n.value, budget);
        if (pe == 0) break;  // larger exponents only grow
        factors.push_back({p.value, p.expr, n.value, n.expr});
        if (side == 0)
          self(self, prime_limit - 1, num_v * pe, den_v);
        else
          self(self, prime_limit - 1, num_v, den_v * pe);
        factors.pop_back();
      }
    }
  };
  walk(walk, state.primes.size(), 1, 1);

  std::sort(out.begin(), out.end(), [](const RationalExpr& a, const RationalExpr& b) {
    if (a.den_value != b.den_value) return a.den_value < b.den_value;
    return a.num_value < b.num_value;
  });
  return out;
}

}  // namespace forge
