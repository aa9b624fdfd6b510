#include <map>
#include <vector>

#include "forge/canonical.hpp"
#include "forge/errors.hpp"

namespace forge {
namespace {

// Every strict subvalue of a minimal expression for n is <= n: sums and
// products of parts >= 1 only grow, and after the non-triviality rewrites a
// power's base and exponent are both >= 2. So the search can discard any
// combined value above n.
using ValueTable = std::map<Natural, const Expr*>;

enum class Op { Pow, Mul, Add };

}  // namespace

const Expr* shortest_expr(const Natural& n, std::size_t max_leaves,
                          const ShortestOptions& opts) {
  if (n.is_zero()) throw DomainError("shortest_expr: n must be >= 1");
  if (max_leaves == 0) return nullptr;

  std::vector<ValueTable> by_budget(max_leaves + 1);
  ValueTable best;  // first expression found per value, budgets ascending
  std::size_t total_entries = 0;

  auto record = [&](std::size_t budget, const Natural& v, const Expr* e) {
    if (by_budget[budget].emplace(v, e).second) {
      if (++total_entries > opts.max_table_entries)
        throw ResourceLimitError("shortest_expr: value table exceeds entry cap");
    }
  };

  record(1, Natural(1), mk_one());
  best.emplace(Natural(1), mk_one());
  if (n == Natural(1)) return mk_one();

  const Natural one(1);
  const std::size_t n_bits = n.bit_length();

  for (std::size_t b = 2; b <= max_leaves; ++b) {
    for (Op op : {Op::Pow, Op::Mul, Op::Add}) {
      for (std::size_t b1 = 1; b1 < b; ++b1) {
        const std::size_t b2 = b - b1;
        for (const auto& [u, eu] : by_budget[b1]) {
          for (const auto& [v, ev] : by_budget[b2]) {
            Natural w;
            const Expr* e = nullptr;
            switch (op) {
              case Op::Pow: {
                if (u <= one || v <= one) continue;  // 1^g and g^1 collapse
                if (!v.fits_u64()) continue;
                std::uint64_t ev64 = v.to_u64();
                // bits(u^v) >= v*(bits(u)-1)+1; skip early when over n.
                if (ev64 > n_bits) continue;
                if ((u.bit_length() - 1) * ev64 + 1 > n_bits + 1) continue;
                w = u.pow(ev64);
                if (w > n) continue;
                e = mk_power(eu, ev);
                break;
              }
              case Op::Mul:
                if (u == one || v == one) continue;  // unit factors collapse
                w = u * v;
                if (w > n) continue;
                e = mk_product({eu, ev});
                break;
              case Op::Add:
                w = u + v;
                if (w > n) continue;
                e = mk_sum({eu, ev});
                break;
            }
            record(b, w, e);
          }
        }
      }
    }
    for (const auto& [v, e] : by_budget[b]) best.emplace(v, e);
    if (auto it = best.find(n); it != best.end()) return it->second;
  }
  return nullptr;
}

}  // namespace forge
