#include "forge/expr.hpp"

#include "forge/errors.hpp"

namespace forge {
namespace {

std::uint64_t hash_node(Kind kind, const std::vector<const Expr*>& children) {
  // FNV-1a over the tag and child identities.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(kind));
  for (const Expr* c : children) mix(reinterpret_cast<std::uintptr_t>(c));
  return h;
}

bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t* out) {
  return __builtin_mul_overflow(a, b, out);
}

std::uint64_t small_value_of(Kind kind, const std::vector<const Expr*>& children) {
  switch (kind) {
    case Kind::One:
      return 1;
    case Kind::Sum: {
      std::uint64_t acc = 0;
      for (const Expr* c : children) {
        std::uint64_t v = c->small_value();
        if (v == 0 || __builtin_add_overflow(acc, v, &acc)) return 0;
      }
      return acc;
    }
    case Kind::Product: {
      std::uint64_t acc = 1;
      for (const Expr* c : children) {
        std::uint64_t v = c->small_value();
        if (v == 0 || mul_overflows(acc, v, &acc)) return 0;
      }
      return acc;
    }
    case Kind::Power: {
      std::uint64_t b = children[0]->small_value();
      std::uint64_t e = children[1]->small_value();
      if (b == 0 || e == 0) return 0;
      // b >= 2 and e >= 2 after simplification; 64 squarings always overflow.
      if (e >= 64) return 0;
      std::uint64_t acc = 1;
      for (std::uint64_t i = 0; i < e; ++i) {
        if (mul_overflows(acc, b, &acc)) return 0;
      }
      return acc;
    }
  }
  return 0;
}

}  // namespace

Expr::Expr(Kind kind, std::vector<const Expr*> children)
    : kind_(kind),
      hash_(hash_node(kind, children)),
      small_(small_value_of(kind, children)),
      children_(std::move(children)) {}

Registry::Registry() {
  one_ = intern(Kind::One, {});
  x_ = intern(Kind::Sum, {one_, one_});
}

Registry& Registry::instance() {
  static Registry r;
  return r;
}

std::size_t Registry::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return nodes_.size();
}

const Expr* Registry::intern(Kind kind, std::vector<const Expr*> children) {
  Expr probe(kind, std::move(children));
  std::lock_guard<std::mutex> lock(mu_);
  auto it = nodes_.find(&probe);
  if (it != nodes_.end()) return *it;
  arena_.push_back(std::move(probe));
  const Expr* stored = &arena_.back();
  nodes_.insert(stored);
  insertions_.fetch_add(1, std::memory_order_relaxed);
  return stored;
}

const Expr* mk_one() { return Registry::instance().one(); }

const Expr* mk_x() { return Registry::instance().x(); }

const Expr* mk_sum(std::span<const Expr* const> children) {
  if (children.empty()) throw DomainError("mk_sum: empty child list");
  Registry& reg = Registry::instance();
  std::vector<const Expr*> flat;
  flat.reserve(children.size());
  for (const Expr* c : children) {
    // Flatten nested sums, but keep the x abbreviation atomic: the
    // canonical forms use x itself as a sum term.
    if (c->kind() == Kind::Sum && c != reg.x()) {
      flat.insert(flat.end(), c->children().begin(), c->children().end());
    } else {
      flat.push_back(c);
    }
  }
  if (flat.size() == 1) return flat[0];
  return reg.intern(Kind::Sum, std::move(flat));
}

const Expr* mk_product(std::span<const Expr* const> children) {
  if (children.empty()) throw DomainError("mk_product: empty child list");
  Registry& reg = Registry::instance();
  std::vector<const Expr*> flat;
  flat.reserve(children.size());
  for (const Expr* c : children) {
    if (c->kind() == Kind::One) continue;  // unit factors dropped
    if (c->kind() == Kind::Product) {
      flat.insert(flat.end(), c->children().begin(), c->children().end());
    } else {
      flat.push_back(c);
    }
  }
  if (flat.empty()) return reg.one();
  if (flat.size() == 1) return flat[0];
  return reg.intern(Kind::Product, std::move(flat));
}

const Expr* mk_power(const Expr* base, const Expr* exponent) {
  Registry& reg = Registry::instance();
  if (exponent->kind() == Kind::One) return base;  // g^1 -> g
  if (base->kind() == Kind::One) return reg.one();  // 1^g -> 1
  return reg.intern(Kind::Power, {base, exponent});
}

bool is_nontrivial(const Expr* e) {
  switch (e->kind()) {
    case Kind::One:
      return true;
    case Kind::Sum:
    case Kind::Product:
      for (const Expr* c : e->children()) {
        if (e->kind() == Kind::Product && c->kind() == Kind::One) return false;
        if (!is_nontrivial(c)) return false;
      }
      return true;
    case Kind::Power:
      if (e->exponent()->kind() == Kind::One) return false;  // g^1
      if (e->base()->kind() == Kind::One) return false;      // 1^g
      return is_nontrivial(e->base()) && is_nontrivial(e->exponent());
  }
  return false;
}

}  // namespace forge
