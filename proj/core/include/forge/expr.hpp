#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <mutex>
#include <span>
#include <unordered_set>
#include <vector>

namespace forge {

// Node variants of a formula over the alphabet {1, +, *, ^}.
enum class Kind : std::uint8_t { One, Sum, Product, Power };

// Immutable expression node. Nodes are built through the smart constructors
// below and interned in a process-wide registry keyed by structure, so
// structural equality is pointer equality and subterms are shared.
//
// The smart constructors keep every reachable node non-trivial: no subterm
// g^1 (collapsed to g), 1^g (collapsed to 1), or unit factor in a product
// (dropped; a singleton product collapses to its child). Sums and products
// are flattened n-ary, with one exception: the interned node for x = (1+1)
// stays atomic as a sum child, since the canonical forms use x as a term.
class Expr {
 public:
  Kind kind() const { return kind_; }
  const std::vector<const Expr*>& children() const { return children_; }
  std::size_t arity() const { return children_.size(); }
  const Expr* base() const { return children_[0]; }      // Power only
  const Expr* exponent() const { return children_[1]; }  // Power only
  std::uint64_t hash() const { return hash_; }

  // Evaluated value when it fits in 64 bits, 0 otherwise (expression values
  // are always >= 1, so 0 is free as the "too big" sentinel). Computed once
  // at construction; the batch generators lean on it.
  std::uint64_t small_value() const { return small_; }
  bool has_small_value() const { return small_ != 0; }

  Expr(const Expr&) = delete;
  Expr& operator=(const Expr&) = delete;
  Expr(Expr&&) = default;

 private:
  friend class Registry;
  Expr(Kind kind, std::vector<const Expr*> children);

  Kind kind_;
  std::uint64_t hash_;
  std::uint64_t small_;
  std::vector<const Expr*> children_;
};

const Expr* mk_one();
const Expr* mk_x();
const Expr* mk_sum(std::span<const Expr* const> children);
const Expr* mk_product(std::span<const Expr* const> children);
const Expr* mk_power(const Expr* base, const Expr* exponent);

// Deduplicating store of every node ever built. Insertions are serialized;
// interned nodes are immutable and freely shared across threads.
class Registry {
 public:
  static Registry& instance();

  const Expr* one() const { return one_; }
  const Expr* x() const { return x_; }

  // Total nodes ever interned: the insertion half of the manipulation
  // counter model (see counters.hpp).
  std::uint64_t insertions() const { return insertions_.load(std::memory_order_relaxed); }
  std::size_t size() const;

  Registry(const Registry&) = delete;
  Registry& operator=(const Registry&) = delete;

 private:
  friend const Expr* mk_one();
  friend const Expr* mk_x();
  friend const Expr* mk_sum(std::span<const Expr* const>);
  friend const Expr* mk_product(std::span<const Expr* const>);
  friend const Expr* mk_power(const Expr*, const Expr*);

  Registry();
  const Expr* intern(Kind kind, std::vector<const Expr*> children);

  struct NodeHash {
    std::size_t operator()(const Expr* e) const { return static_cast<std::size_t>(e->hash()); }
  };
  struct NodeEq {
    bool operator()(const Expr* a, const Expr* b) const {
      return a->kind() == b->kind() && a->children() == b->children();
    }
  };

  mutable std::mutex mu_;
  std::deque<Expr> arena_;
  std::unordered_set<const Expr*, NodeHash, NodeEq> nodes_;
  std::atomic<std::uint64_t> insertions_{0};
  const Expr* one_ = nullptr;
  const Expr* x_ = nullptr;
};

inline const Expr* mk_sum(std::initializer_list<const Expr*> children) {
  return mk_sum(std::span<const Expr* const>(children.begin(), children.size()));
}
inline const Expr* mk_product(std::initializer_list<const Expr*> children) {
  return mk_product(std::span<const Expr* const>(children.begin(), children.size()));
}

inline bool is_x(const Expr* e) { return e == Registry::instance().x(); }

// Structural scan for the non-triviality rules; reachable nodes always pass.
bool is_nontrivial(const Expr* e);

}  // namespace forge
