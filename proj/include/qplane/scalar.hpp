#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "qplane/error.hpp"

namespace qplane {

using Integer = mpz_class;
// mpq_class keeps the canonical form: positive denominator, reduced, 0 is 0/1.
using Rational = mpq_class;

std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

bool is_squarefree(std::int64_t n);

// Squarefree part of a nonzero rational r: the unique squarefree integer s with
// r = s * t^2 for some rational t.
std::int64_t squarefree_part(const Rational& r);

// Either Q or Q(sqrt s) with s squarefree and s not in {0, 1}.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field quadratic(std::int64_t radicand);

  // Accepts "Q", "Q(sqrt s)" and "Q(sqrt(s))".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return radicand_ == 0; }
  // 0 for Q.
  std::int64_t radicand() const noexcept { return radicand_; }
  // Q, or Q(sqrt s) with s > 0; such fields embed in the reals with sqrt s > 0.
  bool is_real() const noexcept { return radicand_ >= 0; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::int64_t radicand) : radicand_(radicand) {}

  std::int64_t radicand_ = 0;
};

// Exact scalar rat + irr * sqrt(s) of a field. For Q the irrational part is always 0,
// so every element compares by value regardless of how it was produced.
class FieldElem {
 public:
  FieldElem() = default;
  explicit FieldElem(Field field, Rational value = 0) : field_(field), rat_(std::move(value)) {}
  FieldElem(Field field, long value) : FieldElem(field, Rational(value)) {}

  // rat + irr*sqrt(s); irr must be zero over Q.
  static FieldElem from_parts(Field field, Rational rat, Rational irr);
  // sqrt(s) of a quadratic field.
  static FieldElem generator(Field field);

  const Field& field() const noexcept { return field_; }
  const Rational& rat_part() const noexcept { return rat_; }
  const Rational& irr_part() const noexcept { return irr_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
  bool is_one() const { return rat_ == 1 && sgn(irr_) == 0; }
  bool is_rational() const { return sgn(irr_) == 0; }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& other);
  FieldElem& operator-=(const FieldElem& other);
  FieldElem& operator*=(const FieldElem& other);
  FieldElem& operator/=(const FieldElem& other);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  FieldElem inverse() const;
  // Exact power by repeated squaring; negative exponents invert first.
  FieldElem pow(long exponent) const;

  // Galois conjugate rat - irr*sqrt(s).
  FieldElem conjugate() const;
  // rat^2 - s*irr^2, the field norm down to Q.
  Rational norm() const;

  // Sign under the real embedding with sqrt(s) > 0. Throws NotReal for s < 0.
  int sign() const;

  // Same field and same components.
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }

  // Arbitrary but total order (rat part, then irr part); used only for deterministic sorting.
  friend bool lex_less(const FieldElem& a, const FieldElem& b) {
    if (a.rat_ != b.rat_) return a.rat_ < b.rat_;
    return a.irr_ < b.irr_;
  }

  // Scalar text format: -3, 5/6, sqrt(2), -sqrt(2)/2, (1+2*sqrt(2))/3.
  std::string to_string() const;
  // True when the rendering needs parentheses to act as a factor, e.g. 1+sqrt(2).
  bool is_compound() const { return sgn(rat_) != 0 && sgn(irr_) != 0; }

 private:
  void check_same_field(const FieldElem& other) const;

  Field field_;
  Rational rat_ = 0;
  Rational irr_ = 0;
};

// d with d*d == e in e's field, or nullopt. When two roots exist the one whose
// leading nonzero component (rat part, then irr part) is positive is returned.
std::optional<FieldElem> sqrt_in_field(const FieldElem& e);

// Least n >= 1 with q^n == 1. Only n in {1, 2, 3, 4, 6} are searched: Q and
// quadratic fields contain no other roots of unity, so nullopt means q is not a
// root of unity at all. Throws ZeroParameter for q == 0.
std::optional<unsigned> root_of_unity_order(const FieldElem& q);

}  // namespace qplane
