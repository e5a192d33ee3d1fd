#pragma once

#include <vector>

#include "qplane/scalar.hpp"

namespace qplane {

// w + xi*i + yj*j + zk*k with i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
  FieldElem w;
  FieldElem xi;
  FieldElem yj;
  FieldElem zk;

  static Quaternion scalar(const FieldElem& c);
  static Quaternion zero(Field field) { return scalar(FieldElem(field, 0)); }
  static Quaternion one(Field field) { return scalar(FieldElem(field, 1)); }
  static Quaternion i(Field field);
  static Quaternion j(Field field);
  static Quaternion k(Field field);

  bool is_zero() const { return w.is_zero() && xi.is_zero() && yj.is_zero() && zk.is_zero(); }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const FieldElem& c, const Quaternion& a);
  Quaternion operator-() const;

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

// Polynomial in a central variable t with quaternion coefficients; coeffs[n] multiplies t^n.
class QuaternionPoly {
 public:
  explicit QuaternionPoly(Field field) : field_(field) {}
  static QuaternionPoly monomial(const Quaternion& c, unsigned power);

  const std::vector<Quaternion>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  friend QuaternionPoly operator+(const QuaternionPoly& a, const QuaternionPoly& b);
  friend QuaternionPoly operator*(const QuaternionPoly& a, const QuaternionPoly& b);
  friend QuaternionPoly operator*(const FieldElem& c, const QuaternionPoly& a);

  friend bool operator==(const QuaternionPoly&, const QuaternionPoly&) = default;

 private:
  void trim();

  Field field_;
  std::vector<Quaternion> coeffs_;
};

}  // namespace qplane
