#include "qplane/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace qplane {

SessionConfig::SessionConfig(FieldElem q_value, Field field_value, OutputFormat output_format)
    : q(std::move(q_value)), field(field_value), output(output_format) {
  if (q.field() != field)
    throw FieldMismatch("q = " + q.to_string() + " is not in " + field.to_string());
  if (q.is_zero()) throw ZeroParameter("q must be nonzero");
}

namespace {

constexpr unsigned kMaxExponent = 4096;

struct Token {
  enum class Type { Number, Ident, Symbol, End };
  Type type;
  std::string text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < input.size()) {
    const char ch = input[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
      tokens.push_back({Token::Type::Number, std::string(input.substr(start, i - start)), start});
    } else if (input.substr(i, 4) == "sqrt") {
      i += 4;
      tokens.push_back({Token::Type::Ident, "sqrt", start});
    } else if (ch == 'x' || ch == 'y') {
      // Single-letter variables, so "xy" juxtaposes x and y.
      ++i;
      tokens.push_back({Token::Type::Ident, std::string(1, ch), start});
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (i < input.size() && std::isalpha(static_cast<unsigned char>(input[i]))) ++i;
      tokens.push_back({Token::Type::Ident, std::string(input.substr(start, i - start)), start});
    } else if (std::string_view("+-*/^()").find(ch) != std::string_view::npos) {
      tokens.push_back({Token::Type::Symbol, std::string(1, ch), start});
      ++i;
    } else {
      throw SyntaxError(std::string("unexpected character '") + ch + "'", start);
    }
  }
  tokens.push_back({Token::Type::End, "", input.size()});
  return tokens;
}

std::unique_ptr<Expr> node(Expr::Kind kind, std::size_t position) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->position = position;
  return e;
}

std::unique_ptr<Expr> binary(Expr::Kind kind, std::unique_ptr<Expr> lhs, std::unique_ptr<Expr> rhs,
                             std::size_t position) {
  auto e = node(kind, position);
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

class Parser {
 public:
  Parser(std::string_view input, const SessionConfig& config)
      : tokens_(tokenize(input)), field_(config.field) {}

  std::unique_ptr<Expr> parse_all() {
    if (peek().type == Token::Type::End) throw SyntaxError("empty expression", 0);
    auto e = parse_sum();
    if (peek().type != Token::Type::End) throw SyntaxError("unexpected '" + peek().text + "'", peek().position);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool at_symbol(char c) const {
    return peek().type == Token::Type::Symbol && peek().text[0] == c;
  }
  void expect_symbol(char c) {
    if (!at_symbol(c)) throw SyntaxError(std::string("expected '") + c + "'", peek().position);
    advance();
  }

  bool starts_atom() const {
    const Token& t = peek();
    return t.type == Token::Type::Number || t.type == Token::Type::Ident || at_symbol('(');
  }

  std::unique_ptr<Expr> parse_sum() {
    auto lhs = parse_product();
    while (at_symbol('+') || at_symbol('-')) {
      const Token op = advance();
      auto rhs = parse_product();
      lhs = binary(op.text[0] == '+' ? Expr::Kind::Add : Expr::Kind::Sub, std::move(lhs),
                   std::move(rhs), op.position);
    }
    return lhs;
  }

  std::unique_ptr<Expr> parse_product() {
    auto lhs = parse_unary();
    while (true) {
      if (at_symbol('*') || at_symbol('/')) {
        const Token op = advance();
        auto rhs = parse_unary();
        lhs = binary(op.text[0] == '*' ? Expr::Kind::Mul : Expr::Kind::Div, std::move(lhs),
                     std::move(rhs), op.position);
      } else if (starts_atom()) {
        const std::size_t position = peek().position;
        auto rhs = parse_unary();
        lhs = binary(Expr::Kind::Mul, std::move(lhs), std::move(rhs), position);
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> parse_unary() {
    if (at_symbol('-')) {
      const std::size_t position = advance().position;
      auto e = node(Expr::Kind::Neg, position);
      e->lhs = parse_unary();
      return e;
    }
    if (at_symbol('+')) {
      advance();
      return parse_unary();
    }
    return parse_power();
  }

  std::unique_ptr<Expr> parse_power() {
    auto base = parse_atom();
    if (!at_symbol('^')) return base;
    const std::size_t position = advance().position;
    auto e = node(Expr::Kind::Pow, position);
    e->lhs = std::move(base);
    e->exponent = parse_exponent();
    return e;
  }

  // Integer literal, right-associative: 2^3^2 = 2^9.
  unsigned parse_exponent() {
    const Token& t = peek();
    if (t.type != Token::Type::Number) throw SyntaxError("exponent must be a nonnegative integer", t.position);
    advance();
    unsigned long base = std::stoul(t.text.size() > 6 ? "99999999" : t.text);
    if (at_symbol('^')) {
      advance();
      const unsigned top = parse_exponent();
      unsigned long value = 1;
      for (unsigned i = 0; i < top && value <= kMaxExponent; ++i) value *= base;
      if (top > 0 && base == 0) value = 0;
      base = value;
    }
    if (base > kMaxExponent) throw SyntaxError("exponent too large", t.position);
    return static_cast<unsigned>(base);
  }

  std::unique_ptr<Expr> parse_atom() {
    const Token t = advance();
    switch (t.type) {
      case Token::Type::Number: {
        auto e = node(Expr::Kind::Const, t.position);
        e->value = FieldElem(field_, Rational(Integer(t.text)));
        return e;
      }
      case Token::Type::Ident: {
        if (t.text == "x") return node(Expr::Kind::VarX, t.position);
        if (t.text == "y") return node(Expr::Kind::VarY, t.position);
        if (t.text == "sqrt") return parse_sqrt(t.position);
        throw UnknownSymbol("'" + t.text + "' at " + std::to_string(t.position));
      }
      case Token::Type::Symbol:
        if (t.text == "(") {
          auto e = parse_sum();
          expect_symbol(')');
          return e;
        }
        throw SyntaxError("unexpected '" + t.text + "'", t.position);
      case Token::Type::End:
        break;
    }
    throw SyntaxError("unexpected end of input", t.position);
  }

  std::unique_ptr<Expr> parse_sqrt(std::size_t position) {
    expect_symbol('(');
    bool negative = false;
    if (at_symbol('-')) {
      advance();
      negative = true;
    }
    const Token& t = peek();
    if (t.type != Token::Type::Number) throw SyntaxError("sqrt expects an integer", t.position);
    advance();
    expect_symbol(')');
    Integer radicand(t.text);
    if (negative) radicand = -radicand;
    const auto root = sqrt_in_field(FieldElem(field_, Rational(radicand)));
    if (!root)
      throw RadicalOutsideField("sqrt(" + radicand.get_str() + ") is not in " + field_.to_string());
    auto e = node(Expr::Kind::Const, position);
    e->value = *root;
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Field field_;
};

}  // namespace

std::unique_ptr<Expr> parse(std::string_view input, const SessionConfig& config) {
  return Parser(input, config).parse_all();
}

QPoly evaluate(const Expr& e, const SessionConfig& config) {
  const FieldElem& q = config.q;
  switch (e.kind) {
    case Expr::Kind::Const:
      return QPoly::constant(q, e.value);
    case Expr::Kind::VarX:
      return QPoly::x(q);
    case Expr::Kind::VarY:
      return QPoly::y(q);
    case Expr::Kind::Neg:
      return -evaluate(*e.lhs, config);
    case Expr::Kind::Add:
      return evaluate(*e.lhs, config) + evaluate(*e.rhs, config);
    case Expr::Kind::Sub:
      return evaluate(*e.lhs, config) - evaluate(*e.rhs, config);
    case Expr::Kind::Mul:
      return evaluate(*e.lhs, config) * evaluate(*e.rhs, config);
    case Expr::Kind::Div: {
      const QPoly divisor = evaluate(*e.rhs, config);
      if (!divisor.is_constant())
        throw SyntaxError("division by the non-constant " + to_string(divisor), e.position);
      if (divisor.is_zero()) throw DivisionByZero("division by zero at " + std::to_string(e.position));
      return divisor.constant_value().inverse() * evaluate(*e.lhs, config);
    }
    case Expr::Kind::Pow:
      return pow(evaluate(*e.lhs, config), e.exponent);
  }
  throw SyntaxError("malformed expression", e.position);
}

QPoly parse_polynomial(std::string_view input, const SessionConfig& config) {
  return evaluate(*parse(input, config), config);
}

FieldElem parse_scalar(std::string_view input, Field field) {
  const SessionConfig scratch(FieldElem(field, 1), field);
  const QPoly value = parse_polynomial(input, scratch);
  if (!value.is_constant())
    throw SyntaxError("expected a scalar, got " + to_string(value), 0);
  return value.constant_value();
}

}  // namespace qplane
