#include "forge/fcf_gen.hpp"

#include <bit>

#include "forge/errors.hpp"

namespace forge {
namespace {

// Base term list for one step: [1] ++ [x^f for f in level], ascending by
// value (1, 2, 4, ..., 2^|N_k|). Term j carries value 2^j, so the sum over
// the set bits of a counter m has value exactly m and counting m upward
// emits output already sorted. A truncated step only ever touches the first
// bit_width(limit) terms, so only those are built.
std::vector<const Expr*> base_terms(const FcfLevel& level, std::uint64_t limit,
                                    ManipulationCounters* counters) {
  std::size_t needed = static_cast<std::size_t>(std::bit_width(limit));
  std::size_t count = std::min(level.expressions.size() + 1, needed);
  std::vector<const Expr*> base;
  base.reserve(count);
  base.push_back(mk_one());
  for (std::size_t j = 1; j < count; ++j) {
    base.push_back(mk_power(mk_x(), level.expressions[j - 1].expr));
    if (counters) ++counters->assembly_steps;
  }
  return base;
}

ExprSet emit_subset_sums(const std::vector<const Expr*>& base, std::uint64_t limit,
                         ManipulationCounters* counters) {
  std::vector<ValuedExpr> out;
  out.reserve(limit);
  std::vector<const Expr*> terms;
  for (std::uint64_t mask = 1; mask <= limit; ++mask) {
    terms.clear();
    // Children descending by value = bits high to low; bit 0 is the
    // trailing 1.
    std::uint64_t m = mask;
    while (m) {
      int bit = 63 - std::countl_zero(m);
      terms.push_back(base[static_cast<std::size_t>(bit)]);
      m &= ~(1ull << bit);
    }
    const Expr* e = terms.size() == 1 ? terms[0] : mk_sum(terms);
    if (counters) ++counters->assembly_steps;
    out.push_back({mask, e});
  }
  return ExprSet(std::move(out));
}

FcfLevel step_with_limit(const FcfLevel& level, std::uint64_t limit,
                         ManipulationCounters* counters) {
  std::vector<const Expr*> base = base_terms(level, limit, counters);
  return FcfLevel{level.index + 1, emit_subset_sums(base, limit, counters)};
}

// 2^|B| - 1, saturating.
std::uint64_t full_size(std::size_t base_count) {
  if (base_count >= 64) return ~0ull;
  return (1ull << base_count) - 1;
}

}  // namespace

FcfLevel fcf_initial() {
  return FcfLevel{0, ExprSet({{1, mk_one()}})};
}

FcfLevel fcf_step(const FcfLevel& level, const FcfGenOptions& opts,
                  ManipulationCounters* counters) {
  std::uint64_t out_size = full_size(level.expressions.size() + 1);
  if (out_size > opts.output_cap)
    throw ResourceLimitError("fcf_step: level of " + std::to_string(out_size) +
                             " expressions exceeds the output cap");
  std::uint64_t before = Registry::instance().insertions();
  FcfLevel next = step_with_limit(level, out_size, counters);
  if (counters) counters->new_nodes += Registry::instance().insertions() - before;
  return next;
}

FcfGenerateResult fcf_generate(std::uint64_t target, const FcfGenOptions& opts) {
  if (target == 0) throw DomainError("fcf_generate: target must be >= 1");
  if (target > opts.output_cap)
    throw ResourceLimitError("fcf_generate: target exceeds the output cap");

  FcfGenerateResult result;
  std::uint64_t before = Registry::instance().insertions();
  FcfLevel level = fcf_initial();
  while (level.expressions.max_value() < target) {
    std::uint64_t next_full = full_size(level.expressions.size() + 1);
    // Intermediate levels must be complete (they feed the next base list);
    // only the final step stops at the target.
    std::uint64_t limit = next_full >= target ? target : next_full;
    level = step_with_limit(level, limit, &result.counters);
    ++result.iterations;
  }
  result.counters.new_nodes += Registry::instance().insertions() - before;
  result.expressions = std::move(level.expressions);
  return result;
}

}  // namespace forge
