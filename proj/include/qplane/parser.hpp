#pragma once

#include <cstddef>
#include <memory>
#include <string_view>

#include "qplane/qpoly.hpp"

namespace qplane {

enum class OutputFormat { Text, Json };

struct SessionConfig {
  FieldElem q;
  Field field;
  OutputFormat output = OutputFormat::Text;

  // Throws ZeroParameter for q == 0 and FieldMismatch if q is not in `field`.
  SessionConfig(FieldElem q, Field field, OutputFormat output = OutputFormat::Text);
};

// Syntax tree. Mul keeps its operands in source order; Pow carries a literal exponent.
// Div is accepted only with a constant divisor, which makes rationals such as 3/2 and
// scalars such as (1+sqrt(2))/3 ordinary expressions.
struct Expr {
  enum class Kind { Const, VarX, VarY, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Const;
  FieldElem value;
  unsigned exponent = 0;
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;
  std::size_t position = 0;
};

// Precedence, low to high: + and binary -, then * / and juxtaposition, then unary -, then
// right-associative ^ with an integer literal exponent. Atoms: integers, x, y, sqrt(s) and
// parenthesized expressions. Throws SyntaxError, UnknownSymbol and RadicalOutsideField.
std::unique_ptr<Expr> parse(std::string_view input, const SessionConfig& config);

QPoly evaluate(const Expr& e, const SessionConfig& config);

QPoly parse_polynomial(std::string_view input, const SessionConfig& config);

// A constant expression over `field`, e.g. "-1", "3/2" or "(1+sqrt(-3))/2".
FieldElem parse_scalar(std::string_view input, Field field);

}  // namespace qplane
