#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "forge/errors.hpp"
#include "forge/expr.hpp"

namespace forge {

struct ValuedExpr {
  std::uint64_t value;
  const Expr* expr;
};

// Expressions kept sorted by evaluated value, strictly ascending. The batch
// generators stay within 64-bit value range by construction (their caps are
// far below 2^63), so values ride along as machine words.
class ExprSet {
 public:
  ExprSet() = default;
  explicit ExprSet(std::vector<ValuedExpr> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      if (entries_[i - 1].value >= entries_[i].value)
        throw DomainError("ExprSet entries must be strictly ascending by value");
    }
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const ValuedExpr& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::uint64_t max_value() const { return entries_.empty() ? 0 : entries_.back().value; }

  // Values are exactly 1..size().
  bool contiguous_from_one() const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].value != i + 1) return false;
    }
    return true;
  }

  // Expression for a value, or nullptr. O(1) when contiguous, else binary
  // search.
  const Expr* at_value(std::uint64_t v) const {
    if (entries_.empty() || v == 0) return nullptr;
    if (v <= entries_.size() && entries_[v - 1].value == v) return entries_[v - 1].expr;
    std::size_t lo = 0, hi = entries_.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (entries_[mid].value < v)
        lo = mid + 1;
      else
        hi = mid;
    }
    return (lo < entries_.size() && entries_[lo].value == v) ? entries_[lo].expr : nullptr;
  }

  void append(ValuedExpr e) {
    if (!entries_.empty() && entries_.back().value >= e.value)
      throw DomainError("ExprSet::append out of order");
    entries_.push_back(e);
  }

  const std::vector<ValuedExpr>& entries() const { return entries_; }
  std::vector<ValuedExpr> take() && { return std::move(entries_); }

 private:
  std::vector<ValuedExpr> entries_;
};

}  // namespace forge
