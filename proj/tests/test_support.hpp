#pragma once

// Shared test utilities: a raw (unsimplified) tree model with its own GMP
// evaluator, independent of the library's construction and evaluation
// paths, plus a seeded random generator over it.

#include <gmpxx.h>

#include <random>
#include <string>
#include <vector>

#include "forge/expr.hpp"

namespace forge_test {

struct RawNode {
  char op;  // '1', 'x', '+', '*', '^'
  std::vector<RawNode> kids;
};

inline mpz_class raw_eval(const RawNode& t) {
  switch (t.op) {
    case '1':
      return 1;
    case 'x':
      return 2;
    case '+': {
      mpz_class acc = 0;
      for (const RawNode& k : t.kids) acc += raw_eval(k);
      return acc;
    }
    case '*': {
      mpz_class acc = 1;
      for (const RawNode& k : t.kids) acc *= raw_eval(k);
      return acc;
    }
    case '^': {
      mpz_class b = raw_eval(t.kids[0]);
      mpz_class e = raw_eval(t.kids[1]);
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e.get_ui());
      return r;
    }
  }
  return 0;
}

// Upper estimate of log2(value), used to keep generated samples well under
// the evaluation bit cap. Saturates far above any accepted size.
inline double log2_estimate(const RawNode& t) {
  constexpr double kSaturate = 1e15;
  switch (t.op) {
    case '1':
      return 0.0;
    case 'x':
      return 1.0;
    case '+': {
      double m = 0.0;
      for (const RawNode& k : t.kids) m = std::max(m, log2_estimate(k));
      return m + static_cast<double>(t.kids.size());
    }
    case '*': {
      double s = 0.0;
      for (const RawNode& k : t.kids) s += log2_estimate(k) + 1.0;
      return s;
    }
    case '^': {
      double lb = log2_estimate(t.kids[0]) + 1.0;
      double le = log2_estimate(t.kids[1]) + 1.0;
      if (le > 50.0) return kSaturate;
      return std::min(kSaturate, lb * std::exp2(le));
    }
  }
  return kSaturate;
}

inline const forge::Expr* build_smart(const RawNode& t) {
  switch (t.op) {
    case '1':
      return forge::mk_one();
    case 'x':
      return forge::mk_x();
    case '+':
    case '*': {
      std::vector<const forge::Expr*> kids;
      kids.reserve(t.kids.size());
      for (const RawNode& k : t.kids) kids.push_back(build_smart(k));
      return t.op == '+' ? forge::mk_sum(kids) : forge::mk_product(kids);
    }
    case '^':
      return forge::mk_power(build_smart(t.kids[0]), build_smart(t.kids[1]));
  }
  return nullptr;
}

inline RawNode random_raw(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  int roll = pick(rng);
  if (depth <= 0 || roll < 3) {
    return RawNode{roll % 2 == 0 ? '1' : 'x', {}};
  }
  if (roll < 6) {  // sum
    std::uniform_int_distribution<int> arity(2, 4);
    RawNode n{'+', {}};
    int a = arity(rng);
    for (int i = 0; i < a; ++i) n.kids.push_back(random_raw(rng, depth - 1));
    return n;
  }
  if (roll < 8) {  // product
    std::uniform_int_distribution<int> arity(2, 3);
    RawNode n{'*', {}};
    int a = arity(rng);
    for (int i = 0; i < a; ++i) n.kids.push_back(random_raw(rng, depth - 1));
    return n;
  }
  RawNode n{'^', {}};
  n.kids.push_back(random_raw(rng, depth - 1));
  n.kids.push_back(random_raw(rng, depth - 2));
  return n;
}

// A random tree whose value stays far below the default evaluation cap.
inline RawNode random_bounded_raw(std::mt19937_64& rng, int depth,
                                  double max_log2 = 4000.0) {
  for (;;) {
    RawNode t = random_raw(rng, depth);
    if (log2_estimate(t) <= max_log2) return t;
  }
}

}  // namespace forge_test
