#include "forge/canonical.hpp"

#include <algorithm>

#include "forge/errors.hpp"

namespace forge {
namespace {

[[noreturn]] void primality_budget() {
  throw ResourceLimitError("primality/factorization supports n < 2^64 only");
}

std::uint64_t require_u64(const Natural& n) {
  if (!n.fits_u64()) primality_budget();
  return n.to_u64();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime(const Natural& n) { return is_prime(require_u64(n)); }

Factorization factor(std::uint64_t n) {
  if (n == 0) throw DomainError("factor: n must be >= 1");
  Factorization out;
  auto divide_out = [&n, &out](std::uint64_t p) {
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  divide_out(2);
  for (std::uint64_t d = 3; d <= n / d; d += 2) divide_out(d);
  if (n > 1) out.push_back({n, 1});
  return out;
}

Factorization factor(const Natural& n) { return factor(require_u64(n)); }

const Expr* encode_fcf(const Natural& n) {
  if (n.is_zero()) throw DomainError("encode_fcf: n must be >= 1");
  if (n == Natural(1)) return mk_one();
  std::vector<const Expr*> terms;
  std::size_t bits = n.bit_length();
  for (std::size_t pos = bits; pos-- > 0;) {
    if (!n.bit(pos)) continue;
    if (pos == 0) {
      terms.push_back(mk_one());
    } else {
      // x^(encode of the position); position 1 collapses to bare x.
      terms.push_back(mk_power(mk_x(), encode_fcf(Natural(static_cast<unsigned long long>(pos)))));
    }
  }
  return terms.size() == 1 ? terms[0] : mk_sum(terms);
}

const Expr* encode_scf(const Natural& n) {
  if (n.is_zero()) throw DomainError("encode_scf: n must be >= 1");
  if (n == Natural(1)) return mk_one();
  Factorization f = factor(n);
  std::uint64_t two_exp = 0;
  std::vector<const Expr*> factors;
  for (const PrimePower& pp : f) {
    if (pp.prime == 2) {
      two_exp = pp.exponent;
      continue;
    }
    const Expr* base = mk_sum({encode_scf(Natural(pp.prime - 1)), mk_one()});
    factors.push_back(pp.exponent == 1
                          ? base
                          : mk_power(base, encode_scf(Natural(pp.exponent))));
  }
  if (two_exp > 0) {
    factors.push_back(two_exp == 1 ? mk_x()
                                   : mk_power(mk_x(), encode_scf(Natural(two_exp))));
  }
  return factors.size() == 1 ? factors[0] : mk_product(factors);
}

bool is_fcf(const Expr* e) {
  if (e->kind() == Kind::One || is_x(e)) return true;
  if (e->kind() == Kind::Power)
    return is_x(e->base()) && is_fcf(e->exponent());
  if (e->kind() != Kind::Sum) return false;

  // A sum of power terms with strictly descending exponent values; bare x is
  // the exponent-1 term and a single trailing 1 the exponent-0 term.
  bool have_prev = false;
  Natural prev;
  for (const Expr* c : e->children()) {
    Natural exp_value;
    if (c->kind() == Kind::One) {
      exp_value = 0;
    } else if (is_x(c)) {
      exp_value = 1;
    } else if (c->kind() == Kind::Power && is_x(c->base()) && is_fcf(c->exponent())) {
      exp_value = evaluate(c->exponent());
    } else {
      return false;
    }
    if (have_prev && exp_value >= prev) return false;
    prev = std::move(exp_value);
    have_prev = true;
  }
  return true;
}

namespace {

// Odd-prime-power factor of Eq.-(5) shape: (1+f)^g with f, g in SCF and 1+f
// a distinct odd prime. Returns the base's evaluated value through out.
bool scf_prime_factor(const Expr* f, std::uint64_t* base_value) {
  const Expr* base = f;
  if (f->kind() == Kind::Power) {
    base = f->base();
    if (!is_scf(f->exponent())) return false;
  }
  if (base->kind() != Kind::Sum || is_x(base)) return false;
  const auto& ch = base->children();
  if (ch.size() != 2 || ch[1]->kind() != Kind::One) return false;
  if (!is_scf(ch[0])) return false;
  Natural v = evaluate(base);
  if (!v.fits_u64())
    throw ResourceLimitError("SCF base exceeds the primality-test budget");
  std::uint64_t value = v.to_u64();
  if (value % 2 == 0 || !is_prime(value)) return false;
  *base_value = value;
  return true;
}

// x or x^g with g in SCF: the 2^g factor.
bool scf_two_power(const Expr* f) {
  if (is_x(f)) return true;
  return f->kind() == Kind::Power && is_x(f->base()) && is_scf(f->exponent());
}

}  // namespace

bool is_scf(const Expr* e) {
  if (e->kind() == Kind::One || is_x(e)) return true;
  std::vector<const Expr*> factors;
  if (e->kind() == Kind::Product) {
    factors.assign(e->children().begin(), e->children().end());
  } else {
    factors.push_back(e);
  }
  // Odd-prime bases strictly ascending, then at most one power-of-two
  // factor, last.
  std::uint64_t prev_base = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Expr* f = factors[i];
    if (scf_two_power(f)) {
      if (i + 1 != factors.size()) return false;
      return true;
    }
    std::uint64_t base_value = 0;
    if (!scf_prime_factor(f, &base_value)) return false;
    if (base_value <= prev_base) return false;
    prev_base = base_value;
  }
  return true;
}

const Expr* normalize(const Expr* e, CanonicalForm form) {
  Natural v = evaluate(e);
  return form == CanonicalForm::Fcf ? encode_fcf(v) : encode_scf(v);
}

bool equivalent(const Expr* a, const Expr* b) {
  if (a == b) return true;
  return evaluate(a) == evaluate(b);
}

}  // namespace forge
