#include "forge/metrics.hpp"

#include <unordered_map>
#include <utility>

namespace forge {
namespace {

struct LeafGate {
  Natural leaves;
  Natural gates;
};

// x is SUM(1,1), so "after expanding x" falls out of the plain recursion.
const LeafGate& walk(const Expr* e, std::unordered_map<const Expr*, LeafGate>& memo) {
  if (auto it = memo.find(e); it != memo.end()) return it->second;
  LeafGate r;
  switch (e->kind()) {
    case Kind::One:
      r = {1, 0};
      break;
    case Kind::Sum:
    case Kind::Product: {
      Natural leaves = 0, gates = 0;
      for (const Expr* c : e->children()) {
        const LeafGate& lg = walk(c, memo);
        leaves += lg.leaves;
        gates += lg.gates;
      }
      // Binarizing an n-ary node left-to-right yields n-1 fan-in-two gates.
      gates += Natural(static_cast<unsigned long long>(e->arity() - 1));
      r = {std::move(leaves), std::move(gates)};
      break;
    }
    case Kind::Power: {
      const LeafGate& b = walk(e->base(), memo);
      const LeafGate& x = walk(e->exponent(), memo);
      r = {b.leaves + x.leaves, b.gates + x.gates + Natural(1)};
      break;
    }
  }
  return memo.emplace(e, std::move(r)).first->second;
}

}  // namespace

Natural size(const Expr* e, SizeMetric metric) {
  std::unordered_map<const Expr*, LeafGate> memo;
  const LeafGate& lg = walk(e, memo);
  switch (metric) {
    case SizeMetric::Leaves:
      return lg.leaves;
    case SizeMetric::Gates:
      return lg.gates;
    case SizeMetric::Chars:
      // Single-character tokens of the expanded prefix rendering: one per
      // leaf plus one per binarized gate.
      return lg.leaves + lg.gates;
  }
  return lg.leaves;
}

}  // namespace forge
