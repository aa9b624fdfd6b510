#include "forge/eval.hpp"

#include <atomic>
#include <unordered_map>

#include "forge/errors.hpp"

namespace forge {
namespace {

std::atomic<std::size_t> g_default_bit_cap{1u << 20};

[[noreturn]] void over_cap(std::size_t max_bits) {
  throw ResourceLimitError("evaluation exceeds the " + std::to_string(max_bits) +
                           "-bit cap");
}

Natural eval_rec(const Expr* e, const EvalLimits& limits,
                 std::unordered_map<const Expr*, Natural>& memo) {
  if (e->has_small_value()) {
    Natural v(e->small_value());
    if (v.bit_length() > limits.max_bits) over_cap(limits.max_bits);
    return v;
  }
  if (auto it = memo.find(e); it != memo.end()) return it->second;

  Natural result;
  switch (e->kind()) {
    case Kind::One:
      result = 1;
      break;
    case Kind::Sum: {
      Natural acc = 0;
      for (const Expr* c : e->children()) {
        acc += eval_rec(c, limits, memo);
        // Partial sums are monotone, so this also bounds the result.
        if (acc.bit_length() > limits.max_bits) over_cap(limits.max_bits);
      }
      result = std::move(acc);
      break;
    }
    case Kind::Product: {
      Natural acc = 1;
      for (const Expr* c : e->children()) {
        Natural v = eval_rec(c, limits, memo);
        if (acc.bit_length() + v.bit_length() > limits.max_bits + 1)
          over_cap(limits.max_bits);
        acc *= v;
        if (acc.bit_length() > limits.max_bits) over_cap(limits.max_bits);
      }
      result = std::move(acc);
      break;
    }
    case Kind::Power: {
      Natural b = eval_rec(e->base(), limits, memo);
      Natural ex = eval_rec(e->exponent(), limits, memo);
      if (b == Natural(1)) {
        result = 1;
        break;
      }
      // b >= 2: bits(b^e) >= e*(bits(b)-1)+1, so an exponent that does not
      // fit a word is always over any sane cap, and the lower bound lets us
      // refuse before raising.
      if (!ex.fits_u64()) over_cap(limits.max_bits);
      std::uint64_t e64 = ex.to_u64();
      std::size_t base_bits = b.bit_length();
      if (e64 > limits.max_bits || (base_bits - 1) * e64 + 1 > limits.max_bits)
        over_cap(limits.max_bits);
      Natural p = b.pow(e64);
      if (p.bit_length() > limits.max_bits) over_cap(limits.max_bits);
      result = std::move(p);
      break;
    }
  }
  return memo.emplace(e, std::move(result)).first->second;
}

}  // namespace

std::size_t default_eval_bit_cap() { return g_default_bit_cap.load(); }

void set_default_eval_bit_cap(std::size_t bits) { g_default_bit_cap.store(bits); }

Natural evaluate(const Expr* e, const EvalLimits& limits) {
  std::unordered_map<const Expr*, Natural> memo;
  return eval_rec(e, limits, memo);
}

Natural evaluate(const Expr* e) { return evaluate(e, EvalLimits{default_eval_bit_cap()}); }

}  // namespace forge
