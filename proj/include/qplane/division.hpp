#pragma once

#include "qplane/qpoly.hpp"

namespace qplane {

enum class Side { Left, Right };
enum class Direction { X, Y };

const char* to_string(Side side);
const char* to_string(Direction direction);

// Right: f = quotient*g + remainder.  Left: f = g*quotient + remainder.
// In both cases the remainder's degree in `direction` is below the divisor's.
struct DivisionResult {
  QPoly quotient;
  QPoly remainder;
  Side side;
  Direction direction;
};

// True when g's leading coefficient in `direction`, viewed as a polynomial in the other
// variable, is a nonzero constant.
bool admits_division(const QPoly& g, Direction direction);

// Skew Euclidean division. Throws ZeroDivisor for g == 0 and NonUnitLeadingCoefficient
// when the leading coefficient in `direction` involves the other variable.
DivisionResult divmod(const QPoly& f, const QPoly& g, Side side, Direction direction);

// p | f in the two-sided sense: f = p*t or f = t*p for some t. Every admissible
// (side, direction) pair is tried. Throws UnsupportedDivisor when no direction admits
// division by p.
bool divides(const QPoly& p, const QPoly& f);

}  // namespace qplane
