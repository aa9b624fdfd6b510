#pragma once

#include <string>
#include <string_view>

#include "forge/expr.hpp"

namespace forge {

// Infix uses parentheses; prefix and postfix are parenthesis-free
// whitespace-separated token streams over the same tokens.
enum class Notation { Infix, Prefix, Postfix };

struct PrintOptions {
  // Render every x as (1+1) (prefix/postfix: + 1 1 / 1 1 +) instead of "x".
  bool expand_x = false;
};

// Deterministic rendering. Infix always parenthesizes sums and wraps
// non-atomic bases/exponents of ^; products serialize with '*'. Prefix and
// postfix binarize n-ary nodes left-to-right.
std::string print(const Expr* e, Notation n, PrintOptions opts = {});

// Tokens: 1 x + * ^ ( ) with whitespace ignored; the middle dot from the
// display alphabet is accepted for '*' on input. Throws ParseError with a
// 1-based position on malformed input (dangling prefix/postfix operators
// included). parse(print(e, n), n) == e for every e and notation.
const Expr* parse(std::string_view text, Notation n);

}  // namespace forge
