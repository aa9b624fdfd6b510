#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "forge/errors.hpp"
#include "forge/notation.hpp"

namespace forge {
namespace {

enum class Tok : std::uint8_t { One, X, Plus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;  // 1-based character position
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    std::size_t pos = i + 1;
    switch (c) {
      case ' ':
      case '\t':
      case '\n':
      case '\r':
        ++i;
        continue;
      case '1':
        out.push_back({Tok::One, pos});
        break;
      case 'x':
        out.push_back({Tok::X, pos});
        break;
      case '+':
        out.push_back({Tok::Plus, pos});
        break;
      case '*':
        out.push_back({Tok::Star, pos});
        break;
      case '^':
        out.push_back({Tok::Caret, pos});
        break;
      case '(':
        out.push_back({Tok::LParen, pos});
        break;
      case ')':
        out.push_back({Tok::RParen, pos});
        break;
      default:
        // UTF-8 middle dot from the display alphabet, accepted for '*'.
        if (static_cast<unsigned char>(c) == 0xC2 && i + 1 < s.size() &&
            static_cast<unsigned char>(s[i + 1]) == 0xB7) {
          out.push_back({Tok::Star, pos});
          ++i;
          break;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    ++i;
  }
  out.push_back({Tok::End, s.size() + 1});
  return out;
}

// A parsed subexpression plus its provenance: structural_x marks the x node
// when it was assembled from a (1+1) grouping rather than written as the
// token 'x'. A structural (1+1) dissolves into an enclosing sum exactly like
// any other nested sum, whereas token x stays atomic; without the
// distinction the flat sum 1+1+1 could not survive a parenthesis-free round
// trip alongside x+1.
struct Parsed {
  const Expr* expr;
  bool structural_x = false;
};

void splice_into_sum(const Parsed& p, std::vector<const Expr*>& children) {
  if (p.structural_x) {
    children.push_back(mk_one());
    children.push_back(mk_one());
  } else {
    children.push_back(p.expr);  // mk_sum dissolves non-x sums itself
  }
}

Parsed combine_sum(const std::vector<Parsed>& terms) {
  if (terms.size() == 1) return terms[0];
  std::vector<const Expr*> children;
  children.reserve(terms.size());
  for (const Parsed& t : terms) splice_into_sum(t, children);
  const Expr* e = mk_sum(children);
  return {e, is_x(e)};
}

// Collapses (unit factors, singleton products, ^1) hand the surviving
// operand through unchanged, provenance included.
Parsed inherit(const Expr* result, const std::vector<Parsed>& operands) {
  for (const Parsed& op : operands) {
    if (op.expr == result) return {result, op.structural_x};
  }
  return {result, false};
}

Parsed combine_product(const std::vector<Parsed>& factors) {
  if (factors.size() == 1) return factors[0];
  std::vector<const Expr*> children;
  children.reserve(factors.size());
  for (const Parsed& f : factors) children.push_back(f.expr);
  return inherit(mk_product(children), factors);
}

Parsed combine_power(const Parsed& base, const Parsed& exponent) {
  return inherit(mk_power(base.expr, exponent.expr), {base, exponent});
}

// expr := term ('+' term)* ; term := factor ('*' factor)* ;
// factor := atom ('^' factor)? ; atom := '1' | 'x' | '(' expr ')'
class InfixParser {
 public:
  explicit InfixParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Expr* run() {
    Parsed e = expr();
    expect(Tok::End, "end of input");
    return e.expr;
  }

 private:
  static constexpr int kMaxDepth = 10000;

  const Token& peek() const { return toks_[i_]; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
    ++i_;
  }

  Parsed expr() {
    if (++depth_ > kMaxDepth) throw ParseError("nesting too deep", peek().pos);
    std::vector<Parsed> terms{term()};
    while (peek().kind == Tok::Plus) {
      ++i_;
      terms.push_back(term());
    }
    --depth_;
    return combine_sum(terms);
  }

  Parsed term() {
    std::vector<Parsed> factors{factor()};
    while (peek().kind == Tok::Star) {
      ++i_;
      factors.push_back(factor());
    }
    return combine_product(factors);
  }

  Parsed factor() {
    Parsed a = atom();
    if (peek().kind == Tok::Caret) {
      ++i_;
      return combine_power(a, factor());  // right-associative
    }
    return a;
  }

  Parsed atom() {
    Token t = toks_[i_++];
    switch (t.kind) {
      case Tok::One:
        return {mk_one()};
      case Tok::X:
        return {mk_x()};
      case Tok::LParen: {
        Parsed e = expr();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
        ++i_;
        return e;  // parentheses are grouping only; provenance passes through
      }
      default:
        throw ParseError("expected '1', 'x' or '('", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  int depth_ = 0;
};

class PrefixParser {
 public:
  explicit PrefixParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Expr* run() {
    Parsed e = operand();
    if (toks_[i_].kind != Tok::End)
      throw ParseError("trailing tokens after complete expression", toks_[i_].pos);
    return e.expr;
  }

 private:
  Parsed operand() {
    Token t = toks_[i_++];
    switch (t.kind) {
      case Tok::One:
        return {mk_one()};
      case Tok::X:
        return {mk_x()};
      case Tok::Plus: {
        Parsed a = operand();
        Parsed b = operand();
        return combine_sum({a, b});
      }
      case Tok::Star: {
        Parsed a = operand();
        Parsed b = operand();
        return combine_product({a, b});
      }
      case Tok::Caret: {
        Parsed a = operand();
        Parsed b = operand();
        return combine_power(a, b);
      }
      case Tok::End:
        throw ParseError("dangling operator: operand missing", t.pos);
      default:
        throw ParseError("parentheses are not part of prefix notation", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

const Expr* parse_postfix(const std::vector<Token>& toks) {
  std::vector<Parsed> stack;
  auto pop2 = [&stack](const Token& t) {
    if (stack.size() < 2)
      throw ParseError("dangling operator: operand missing", t.pos);
    Parsed b = stack.back();
    stack.pop_back();
    Parsed a = stack.back();
    stack.pop_back();
    return std::pair(a, b);
  };
  for (const Token& t : toks) {
    switch (t.kind) {
      case Tok::One:
        stack.push_back({mk_one()});
        break;
      case Tok::X:
        stack.push_back({mk_x()});
        break;
      case Tok::Plus: {
        auto [a, b] = pop2(t);
        stack.push_back(combine_sum({a, b}));
        break;
      }
      case Tok::Star: {
        auto [a, b] = pop2(t);
        stack.push_back(combine_product({a, b}));
        break;
      }
      case Tok::Caret: {
        auto [a, b] = pop2(t);
        stack.push_back(combine_power(a, b));
        break;
      }
      case Tok::End:
        if (stack.empty()) throw ParseError("empty input", t.pos);
        if (stack.size() > 1)
          throw ParseError("leftover operands: operator missing", t.pos);
        return stack.back().expr;
      default:
        throw ParseError("parentheses are not part of postfix notation", t.pos);
    }
  }
  throw ParseError("empty input", 1);
}

}  // namespace

const Expr* parse(std::string_view text, Notation n) {
  std::vector<Token> toks = lex(text);
  switch (n) {
    case Notation::Infix:
      return InfixParser(std::move(toks)).run();
    case Notation::Prefix:
      return PrefixParser(std::move(toks)).run();
    case Notation::Postfix:
      return parse_postfix(toks);
  }
  throw DomainError("unknown notation");
}

}  // namespace forge
