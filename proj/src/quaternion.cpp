#include "qplane/quaternion.hpp"

#include <algorithm>

namespace qplane {

Quaternion Quaternion::scalar(const FieldElem& c) {
  const FieldElem z(c.field(), 0);
  return {c, z, z, z};
}

Quaternion Quaternion::i(Field field) {
  Quaternion r = zero(field);
  r.xi = FieldElem(field, 1);
  return r;
}

Quaternion Quaternion::j(Field field) {
  Quaternion r = zero(field);
  r.yj = FieldElem(field, 1);
  return r;
}

Quaternion Quaternion::k(Field field) {
  Quaternion r = zero(field);
  r.zk = FieldElem(field, 1);
  return r;
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.xi + b.xi, a.yj + b.yj, a.zk + b.zk};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.xi - b.xi, a.yj - b.yj, a.zk - b.zk};
}

Quaternion Quaternion::operator-() const { return {-w, -xi, -yj, -zk}; }

// Hamilton product: ij = k, jk = i, ki = j.
Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.xi * b.xi - a.yj * b.yj - a.zk * b.zk,
          a.w * b.xi + a.xi * b.w + a.yj * b.zk - a.zk * b.yj,
          a.w * b.yj - a.xi * b.zk + a.yj * b.w + a.zk * b.xi,
          a.w * b.zk + a.xi * b.yj - a.yj * b.xi + a.zk * b.w};
}

Quaternion operator*(const FieldElem& c, const Quaternion& a) {
  return {c * a.w, c * a.xi, c * a.yj, c * a.zk};
}

QuaternionPoly QuaternionPoly::monomial(const Quaternion& c, unsigned power) {
  QuaternionPoly p(c.w.field());
  p.coeffs_.assign(power + 1, Quaternion::zero(c.w.field()));
  p.coeffs_[power] = c;
  p.trim();
  return p;
}

void QuaternionPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QuaternionPoly operator+(const QuaternionPoly& a, const QuaternionPoly& b) {
  QuaternionPoly r(a.field_);
  r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), Quaternion::zero(a.field_));
  for (std::size_t n = 0; n < a.coeffs_.size(); ++n) r.coeffs_[n] = r.coeffs_[n] + a.coeffs_[n];
  for (std::size_t n = 0; n < b.coeffs_.size(); ++n) r.coeffs_[n] = r.coeffs_[n] + b.coeffs_[n];
  r.trim();
  return r;
}

QuaternionPoly operator*(const QuaternionPoly& a, const QuaternionPoly& b) {
  QuaternionPoly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Quaternion::zero(a.field_));
  // t is central, so only the quaternion coefficients need ordering.
  for (std::size_t m = 0; m < a.coeffs_.size(); ++m)
    for (std::size_t n = 0; n < b.coeffs_.size(); ++n)
      r.coeffs_[m + n] = r.coeffs_[m + n] + a.coeffs_[m] * b.coeffs_[n];
  r.trim();
  return r;
}

QuaternionPoly operator*(const FieldElem& c, const QuaternionPoly& a) {
  QuaternionPoly r(a.field_);
  for (const Quaternion& x : a.coeffs_) r.coeffs_.push_back(c * x);
  r.trim();
  return r;
}

}  // namespace qplane
