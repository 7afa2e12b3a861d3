#pragma once

// Text grammar, canonical plain output, LaTeX and a lossless JSON tree.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := atom ['^' rational]
//   atom   := nat | 'w' | 'k' '(' ['-'] nat ')' | 'tail' '(' nat ',' nat ')'
//           | 'exp' '(' expr ')' | 'log' '(' expr ')' | 'log'N '(' expr ')'
//           | 'O' '(' expr ')' | '(' expr ')'
//   rational := nat ['/' nat] | '(' ['-'] nat ['/' nat] ')'
//
// Canonical plain form: terms in decreasing order as coefficient times
// monomial; a monomial whose exponent is a combination of log-chain atoms is
// written as a product of powers ("w^2/log(w)", "1/(w*log(w))",
// "w^(1/2)"), any other as "exp(...)".  Non-integer exponents are always
// parenthesised, tails print as "c*tail(alpha,start)" at their head's
// position and a remainder as a final "+ O(monomial)".

#include <string>
#include <string_view>

#include "surreal/transseries.hpp"

namespace surreal {

enum class FormatStyle { plain, latex, structured };

Transseries parse(std::string_view src, const PrecisionContext& ctx = {});

std::string format(const Transseries& x, FormatStyle style = FormatStyle::plain);
std::string format(const Monomial& m, FormatStyle style = FormatStyle::plain);
std::string format(const Term& t, FormatStyle style = FormatStyle::plain);

// Inverse of format(x, FormatStyle::structured).
Transseries from_structured(std::string_view json);

} // namespace surreal
