#include <string>

#include "forge/notation.hpp"

namespace forge {
namespace {

bool abbreviate_as_x(const Expr* e, const PrintOptions& opts) {
  return !opts.expand_x && is_x(e);
}

// Sums always carry their own parentheses, so only products and powers need
// wrapping in the base/exponent slots of '^'.
void infix(const Expr* e, const PrintOptions& opts, std::string& out) {
  if (abbreviate_as_x(e, opts)) {
    out += 'x';
    return;
  }
  switch (e->kind()) {
    case Kind::One:
      out += '1';
      return;
    case Kind::Sum: {
      out += '(';
      bool first = true;
      for (const Expr* c : e->children()) {
        if (!first) out += '+';
        first = false;
        infix(c, opts, out);
      }
      out += ')';
      return;
    }
    case Kind::Product: {
      bool first = true;
      for (const Expr* c : e->children()) {
        if (!first) out += '*';
        first = false;
        infix(c, opts, out);
      }
      return;
    }
    case Kind::Power: {
      auto operand = [&](const Expr* c) {
        bool wrap = c->kind() == Kind::Product || c->kind() == Kind::Power;
        if (wrap) out += '(';
        infix(c, opts, out);
        if (wrap) out += ')';
      };
      operand(e->base());
      out += '^';
      operand(e->exponent());
      return;
    }
  }
}

// Prefix and postfix binarize n-ary nodes left-to-right: ((a+b)+c) prints
// as "+ + a b c" and "a b + c +".
void tokens(const Expr* e, const PrintOptions& opts, bool prefix,
            std::vector<char>& out) {
  if (abbreviate_as_x(e, opts)) {
    out.push_back('x');
    return;
  }
  switch (e->kind()) {
    case Kind::One:
      out.push_back('1');
      return;
    case Kind::Sum:
    case Kind::Product: {
      char op = e->kind() == Kind::Sum ? '+' : '*';
      const auto& ch = e->children();
      if (prefix) {
        for (std::size_t i = 0; i + 1 < ch.size(); ++i) out.push_back(op);
        for (const Expr* c : ch) tokens(c, opts, prefix, out);
      } else {
        tokens(ch[0], opts, prefix, out);
        for (std::size_t i = 1; i < ch.size(); ++i) {
          tokens(ch[i], opts, prefix, out);
          out.push_back(op);
        }
      }
      return;
    }
    case Kind::Power:
      if (prefix) {
        out.push_back('^');
        tokens(e->base(), opts, prefix, out);
        tokens(e->exponent(), opts, prefix, out);
      } else {
        tokens(e->base(), opts, prefix, out);
        tokens(e->exponent(), opts, prefix, out);
        out.push_back('^');
      }
      return;
  }
}

std::string join_tokens(const std::vector<char>& toks) {
  std::string out;
  out.reserve(toks.size() * 2);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) out += ' ';
    out += toks[i];
  }
  return out;
}

}  // namespace

std::string print(const Expr* e, Notation n, PrintOptions opts) {
  if (n == Notation::Infix) {
    std::string out;
    infix(e, opts, out);
    return out;
  }
  std::vector<char> toks;
  tokens(e, opts, n == Notation::Prefix, toks);
  return join_tokens(toks);
}

}  // namespace forge
