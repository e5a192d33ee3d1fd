#include "qplane/division.hpp"

#include <array>

namespace qplane {

const char* to_string(Side side) { return side == Side::Left ? "left" : "right"; }

const char* to_string(Direction direction) { return direction == Direction::X ? "x" : "y"; }

namespace {

unsigned exponent_in(const ExponentPair& e, Direction direction) {
  return direction == Direction::X ? e.x_exp : e.y_exp;
}

unsigned other_exponent(const ExponentPair& e, Direction direction) {
  return direction == Direction::X ? e.y_exp : e.x_exp;
}

std::optional<unsigned> degree_in(const QPoly& f, Direction direction) {
  return direction == Direction::X ? f.degree_x() : f.degree_y();
}

// The unit u with g = u*x^m + (lower x-degree terms) (or the y analogue), if it exists.
std::optional<std::pair<ExponentPair, FieldElem>> unit_leading_term(const QPoly& g,
                                                                    Direction direction) {
  const std::optional<unsigned> m = degree_in(g, direction);
  if (!m) return std::nullopt;
  std::optional<std::pair<ExponentPair, FieldElem>> lead;
  for (const auto& [e, c] : g.terms()) {
    if (exponent_in(e, direction) != *m) continue;
    if (lead || other_exponent(e, direction) != 0) return std::nullopt;
    lead.emplace(e, c);
  }
  return lead;
}

ExponentPair minus(const ExponentPair& a, const ExponentPair& b) {
  return {a.x_exp - b.x_exp, a.y_exp - b.y_exp};
}

}  // namespace

bool admits_division(const QPoly& g, Direction direction) {
  return unit_leading_term(g, direction).has_value();
}

DivisionResult divmod(const QPoly& f, const QPoly& g, Side side, Direction direction) {
  if (!f.same_parameters(g))
    throw ParameterMismatch("dividend and divisor use different q or field");
  if (g.is_zero()) throw ZeroDivisor("division by the zero polynomial");
  const auto lead = unit_leading_term(g, direction);
  if (!lead)
    throw NonUnitLeadingCoefficient("leading coefficient of " + to_string(g) + " in " +
                                    to_string(direction) + " is not a constant");
  const auto& [lead_exp, unit] = *lead;
  const unsigned m = exponent_in(lead_exp, direction);

  QPoly quotient(f.q());
  QPoly remainder = f;
  // Each pass cancels one term of top degree in `direction`; the rest of t*g (or g*t)
  // only contributes lower degrees, so the loop terminates.
  while (!remainder.is_zero()) {
    const unsigned top = *degree_in(remainder, direction);
    if (top < m) break;
    std::optional<std::pair<ExponentPair, FieldElem>> target;
    for (const auto& [e, c] : remainder.terms()) {
      if (exponent_in(e, direction) == top) {
        target.emplace(e, c);
        break;
      }
    }
    const ExponentPair shift = minus(target->first, lead_exp);
    // Twist picked up when the quotient term passes the divisor's leading monomial.
    const FieldElem twist = side == Side::Right ? monomial_mul(shift, lead_exp, f.q()).first
                                                : monomial_mul(lead_exp, shift, f.q()).first;
    const QPoly term = QPoly::monomial(f.q(), target->second / (unit * twist), shift);
    quotient += term;
    remainder -= side == Side::Right ? term * g : g * term;
  }
  return {std::move(quotient), std::move(remainder), side, direction};
}

bool divides(const QPoly& p, const QPoly& f) {
  if (p.is_zero()) throw ZeroDivisor("0 divides only 0 and is not an admissible divisor");
  bool admissible = false;
  for (Direction direction : {Direction::X, Direction::Y}) {
    if (!admits_division(p, direction)) continue;
    admissible = true;
    for (Side side : {Side::Left, Side::Right}) {
      if (divmod(f, p, side, direction).remainder.is_zero()) return true;
    }
  }
  if (!admissible)
    throw UnsupportedDivisor(to_string(p) + " has no constant leading coefficient in x or y");
  return false;
}

}  // namespace qplane
