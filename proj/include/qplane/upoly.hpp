#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qplane/scalar.hpp"

namespace qplane {

// Dense commutative polynomial in one variable over Q or Q(sqrt s); coefficient i
// multiplies t^i. Never stores trailing zeros.
class UPoly {
 public:
  explicit UPoly(Field field) : field_(field) {}
  UPoly(Field field, std::vector<FieldElem> coeffs);

  static UPoly constant(const FieldElem& c);
  // t
  static UPoly variable(Field field);

  const Field& field() const noexcept { return field_; }
  const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Throws DegreeOfZero on the zero polynomial.
  std::size_t degree() const;
  FieldElem coeff(std::size_t i) const;
  const FieldElem& leading() const;

  FieldElem operator()(const FieldElem& t) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const FieldElem& c, const UPoly& a);

  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string to_string(const char* var = "t") const;

 private:
  void trim();

  Field field_;
  std::vector<FieldElem> coeffs_;
};

// Euclidean division; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd; zero only when both inputs are zero.
UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);

// Distinct rational roots of a nonzero polynomial over Q, ascending. Exact: real roots are
// isolated with a Sturm sequence over integer intervals after scaling every rational root
// into an integer.
std::vector<Rational> rational_roots(const UPoly& p);

// Distinct roots lying in p's own field, sorted by (rat part, irr part).
std::vector<FieldElem> roots_in_field(const UPoly& p);

// Dense polynomial in (u, v); by_v()[k] is the coefficient of v^k as a polynomial in u.
class BiPoly {
 public:
  explicit BiPoly(Field field) : field_(field) {}

  static BiPoly constant(const FieldElem& c);
  static BiPoly u(Field field);
  static BiPoly v(Field field);
  static BiPoly from_u(const UPoly& p);

  const Field& field() const noexcept { return field_; }
  const std::vector<UPoly>& by_v() const noexcept { return by_v_; }
  bool is_zero() const noexcept { return by_v_.empty(); }

  // Throws DegreeOfZero on zero.
  std::size_t degree_v() const;
  std::size_t max_degree_u() const;
  std::size_t total_degree() const;

  UPoly at_u(const FieldElem& u0) const;  // polynomial in v
  UPoly at_v(const FieldElem& v0) const;  // polynomial in u
  BiPoly swapped() const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const FieldElem& c, const BiPoly& a);

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void trim();

  Field field_;
  std::vector<UPoly> by_v_;
};

// Res_v(a, b) as a polynomial in u, computed by evaluating the Sylvester determinant
// (built from the formal v-degrees) at enough points and interpolating.
UPoly resultant_v(const BiPoly& a, const BiPoly& b);

// Points (u, v) in the field with e1 = e2 = 0.
struct SystemSolutions {
  std::vector<std::pair<FieldElem, FieldElem>> points;
  // False when the equations share a curve component and only a finite probe of that
  // component was searched: an empty `points` then proves nothing.
  bool complete = true;
};

SystemSolutions solve_system(const BiPoly& e1, const BiPoly& e2);

}  // namespace qplane
