#include "qplane/upoly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qplane {

UPoly::UPoly(Field field, std::vector<FieldElem> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const FieldElem& c : coeffs_) {
    if (c.field() != field_) throw FieldMismatch("coefficient outside " + field_.to_string());
  }
  trim();
}

UPoly UPoly::constant(const FieldElem& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::variable(Field field) {
  return UPoly(field, {FieldElem(field, 0), FieldElem(field, 1)});
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t UPoly::degree() const {
  if (coeffs_.empty()) throw DegreeOfZero("zero univariate polynomial");
  return coeffs_.size() - 1;
}

FieldElem UPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : FieldElem(field_, 0);
}

const FieldElem& UPoly::leading() const {
  if (coeffs_.empty()) throw DegreeOfZero("zero univariate polynomial");
  return coeffs_.back();
}

FieldElem UPoly::operator()(const FieldElem& t) const {
  FieldElem acc(field_, 0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<FieldElem> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.push_back(FieldElem(field_, static_cast<long>(i)) * coeffs_[i]);
  return UPoly(field_, std::move(out));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (FieldElem& c : r.coeffs_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  if (a.field_ != b.field_) throw FieldMismatch("univariate operands over different fields");
  std::vector<FieldElem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), FieldElem(a.field_, 0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return UPoly(a.field_, std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.field_ != b.field_) throw FieldMismatch("univariate operands over different fields");
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
  std::vector<FieldElem> out(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElem(a.field_, 0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(a.field_, std::move(out));
}

UPoly operator*(const FieldElem& c, const UPoly& a) {
  std::vector<FieldElem> out = a.coeffs_;
  for (FieldElem& x : out) x = c * x;
  return UPoly(a.field_, std::move(out));
}

std::string UPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].to_string() + ")";
    if (i > 0) out += std::string("*") + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("univariate division by zero");
  const Field field = a.field();
  UPoly quotient(field);
  UPoly remainder = a;
  const FieldElem lead_inv = b.leading().inverse();
  while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
    const std::size_t shift = remainder.degree() - b.degree();
    std::vector<FieldElem> mono(shift + 1, FieldElem(field, 0));
    mono[shift] = remainder.leading() * lead_inv;
    const UPoly term(field, std::move(mono));
    quotient = quotient + term;
    remainder = remainder - term * b;
  }
  return {std::move(quotient), std::move(remainder)};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : r.monic();
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  const UPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

namespace {

using IntPoly = std::vector<Integer>;  // index = power

using ModPoly = std::vector<long>;

void trim_mod(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long mod_pow(long base, long e, long m) {
  long result = 1;
  base %= m;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
  }
  return result;
}

ModPoly reduce_mod(const IntPoly& p, long m) {
  ModPoly r;
  for (const Integer& c : p) r.push_back(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), m)));
  trim_mod(r);
  return r;
}

ModPoly rem_mod(ModPoly a, const ModPoly& b, long m) {
  const long inv = mod_pow(b.back(), m - 2, m);
  while (a.size() >= b.size()) {
    const long f = a.back() * inv % m;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - f * b[i]) % m + m) % m;
    trim_mod(a);
  }
  return a;
}

// True when p keeps its degree mod m and has no repeated factor there.
bool squarefree_mod(const IntPoly& p, long m) {
  ModPoly a = reduce_mod(p, m);
  if (a.size() != p.size()) return false;
  ModPoly b;
  for (std::size_t i = 1; i < a.size(); ++i) b.push_back(static_cast<long>(i % m) * a[i] % m);
  trim_mod(b);
  while (!b.empty()) {
    ModPoly r = rem_mod(a, b, m);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

long eval_mod(const ModPoly& p, long x, long m) {
  long acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = (acc * x + p[i]) % m;
  return acc;
}

Integer eval_int(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

bool is_small_prime(long n) {
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return n >= 2;
}

// Integer polynomial with the same roots, content removed.
IntPoly primitive_part(const UPoly& p) {
  Integer den_lcm = 1;
  for (const FieldElem& c : p.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rat_part().get_den().get_mpz_t());
  Integer content = 0;
  IntPoly ints;
  for (const FieldElem& c : p.coeffs()) {
    Integer n = c.rat_part().get_num() * (den_lcm / c.rat_part().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  for (Integer& n : ints) n /= content;
  if (ints.back() < 0)
    for (Integer& n : ints) n = -n;
  return ints;
}

}  // namespace

// Roots are found mod a prime l where the squarefree part stays squarefree, lifted by Newton
// iteration to l^(2^k) > 2*L*B (L the leading coefficient, B the Cauchy bound), and read off
// as L*root in symmetric range; L*root is an integer for every rational root.
std::vector<Rational> rational_roots(const UPoly& p) {
  if (!p.field().is_rational()) throw FieldMismatch("rational_roots needs a polynomial over Q");
  if (p.is_zero()) throw ZeroInput("every rational is a root of the zero polynomial");
  std::vector<Rational> roots;
  UPoly work = squarefree_part(p);
  if (work.degree() == 0) return roots;
  if (work.coeff(0).is_zero()) {
    roots.push_back(0);
    work = divmod(work, UPoly::variable(work.field())).first;
    if (work.degree() == 0) return roots;
  }

  const IntPoly ints = primitive_part(work);
  const Integer& lead = ints.back();
  IntPoly deriv;
  for (std::size_t i = 1; i < ints.size(); ++i) deriv.push_back(ints[i] * static_cast<long>(i));
  Integer height = 0;
  for (const Integer& c : ints) height = std::max(height, Integer(abs(c)));
  const Integer limit = 2 * (lead + height) + 1;

  long prime = 2;
  while (!squarefree_mod(ints, prime)) {
    do ++prime;
    while (!is_small_prime(prime));
    if (prime > 1000003) throw std::logic_error("no good prime for " + work.to_string());
  }

  const ModPoly reduced = reduce_mod(ints, prime);
  for (long r0 = 0; r0 < prime; ++r0) {
    if (eval_mod(reduced, r0, prime) != 0) continue;
    Integer modulus = prime;
    Integer r = r0;
    while (modulus <= limit) {
      modulus *= modulus;
      Integer inv;
      Integer d = eval_int(deriv, r);
      mpz_mod(d.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
      mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
      r -= eval_int(ints, r) * inv;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    }
    Integer y = lead * r;
    mpz_mod(y.get_mpz_t(), y.get_mpz_t(), modulus.get_mpz_t());
    if (2 * y > modulus) y -= modulus;
    Rational candidate(y, lead);
    candidate.canonicalize();
    if (work(FieldElem(work.field(), candidate)).is_zero()) roots.push_back(std::move(candidate));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}
namespace {

void sort_unique(std::vector<FieldElem>& values) {
  std::sort(values.begin(), values.end(), [](const FieldElem& a, const FieldElem& b) { return lex_less(a, b); });
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace

std::vector<FieldElem> roots_in_field(const UPoly& p) {
  const Field field = p.field();
  if (p.is_zero()) throw ZeroInput("every element is a root of the zero polynomial");
  std::vector<FieldElem> roots;
  if (p.degree() == 0) return roots;
  if (field.is_rational()) {
    for (Rational& r : rational_roots(p)) roots.emplace_back(field, std::move(r));
    return roots;
  }

  // t = u + v*sqrt(s) with u, v rational: p(t) = A(u, v) + B(u, v)*sqrt(s), and a root needs
  // A = B = 0. The two real components have only finitely many common zeros, so the
  // resultant route in solve_system is complete here.
  const Field q_field = Field::rationals();
  const Rational s = field.radicand();
  BiPoly power_a = BiPoly::constant(FieldElem(q_field, 1));
  BiPoly power_b(q_field);
  BiPoly sum_a(q_field);
  BiPoly sum_b(q_field);
  const BiPoly u = BiPoly::u(q_field);
  const BiPoly v = BiPoly::v(q_field);
  const FieldElem s_elem(q_field, s);
  for (std::size_t k = 0; k <= p.degree(); ++k) {
    const FieldElem ca(q_field, p.coeff(k).rat_part());
    const FieldElem cb(q_field, p.coeff(k).irr_part());
    sum_a = sum_a + ca * power_a + (s_elem * cb) * power_b;
    sum_b = sum_b + ca * power_b + cb * power_a;
    BiPoly next_a = power_a * u + s_elem * (power_b * v);
    BiPoly next_b = power_a * v + power_b * u;
    power_a = std::move(next_a);
    power_b = std::move(next_b);
  }
  const SystemSolutions sols = solve_system(sum_a, sum_b);
  if (!sols.complete) throw std::logic_error("component system of a nonzero polynomial is degenerate");
  for (const auto& [ru, rv] : sols.points) {
    FieldElem root = FieldElem::from_parts(field, ru.rat_part(), rv.rat_part());
    if (p(root).is_zero()) roots.push_back(std::move(root));
  }
  sort_unique(roots);
  return roots;
}

BiPoly BiPoly::constant(const FieldElem& c) { return from_u(UPoly::constant(c)); }

BiPoly BiPoly::u(Field field) { return from_u(UPoly::variable(field)); }

BiPoly BiPoly::v(Field field) {
  BiPoly r(field);
  r.by_v_ = {UPoly(field), UPoly::constant(FieldElem(field, 1))};
  return r;
}

BiPoly BiPoly::from_u(const UPoly& p) {
  BiPoly r(p.field());
  r.by_v_ = {p};
  r.trim();
  return r;
}

void BiPoly::trim() {
  while (!by_v_.empty() && by_v_.back().is_zero()) by_v_.pop_back();
}

std::size_t BiPoly::degree_v() const {
  if (by_v_.empty()) throw DegreeOfZero("zero bivariate polynomial");
  return by_v_.size() - 1;
}

std::size_t BiPoly::max_degree_u() const {
  std::size_t d = 0;
  for (const UPoly& c : by_v_)
    if (!c.is_zero()) d = std::max(d, c.degree());
  return d;
}

std::size_t BiPoly::total_degree() const {
  std::size_t d = 0;
  for (std::size_t k = 0; k < by_v_.size(); ++k)
    if (!by_v_[k].is_zero()) d = std::max(d, k + by_v_[k].degree());
  return d;
}

UPoly BiPoly::at_u(const FieldElem& u0) const {
  std::vector<FieldElem> out;
  out.reserve(by_v_.size());
  for (const UPoly& c : by_v_) out.push_back(c(u0));
  return UPoly(field_, std::move(out));
}

UPoly BiPoly::at_v(const FieldElem& v0) const {
  UPoly acc(field_);
  for (auto it = by_v_.rbegin(); it != by_v_.rend(); ++it) acc = v0 * acc + *it;
  return acc;
}

BiPoly BiPoly::swapped() const {
  BiPoly r(field_);
  const std::size_t du = max_degree_u();
  if (is_zero()) return r;
  r.by_v_.assign(du + 1, UPoly(field_));
  for (std::size_t i = 0; i <= du; ++i) {
    std::vector<FieldElem> coeffs;
    for (const UPoly& c : by_v_) coeffs.push_back(c.coeff(i));
    r.by_v_[i] = UPoly(field_, std::move(coeffs));
  }
  r.trim();
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  if (a.field_ != b.field_) throw FieldMismatch("bivariate operands over different fields");
  BiPoly r(a.field_);
  r.by_v_.assign(std::max(a.by_v_.size(), b.by_v_.size()), UPoly(a.field_));
  for (std::size_t i = 0; i < a.by_v_.size(); ++i) r.by_v_[i] = r.by_v_[i] + a.by_v_[i];
  for (std::size_t i = 0; i < b.by_v_.size(); ++i) r.by_v_[i] = r.by_v_[i] + b.by_v_[i];
  r.trim();
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  return a + FieldElem(b.field(), -1) * b;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.field_ != b.field_) throw FieldMismatch("bivariate operands over different fields");
  BiPoly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  r.by_v_.assign(a.by_v_.size() + b.by_v_.size() - 1, UPoly(a.field_));
  for (std::size_t i = 0; i < a.by_v_.size(); ++i)
    for (std::size_t j = 0; j < b.by_v_.size(); ++j)
      r.by_v_[i + j] = r.by_v_[i + j] + a.by_v_[i] * b.by_v_[j];
  r.trim();
  return r;
}

BiPoly operator*(const FieldElem& c, const BiPoly& a) {
  BiPoly r(a.field_);
  for (const UPoly& p : a.by_v_) r.by_v_.push_back(c * p);
  r.trim();
  return r;
}

namespace {

FieldElem determinant(std::vector<std::vector<FieldElem>> m, const Field& field) {
  const std::size_t n = m.size();
  FieldElem det(field, 1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return FieldElem(field, 0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const FieldElem inv = m[col][col].inverse();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      const FieldElem factor = m[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

// Sylvester determinant of two coefficient lists (index = power), with formal degrees
// given by the list lengths.
FieldElem sylvester_det(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b,
                        const Field& field) {
  const std::size_t da = a.size() - 1;
  const std::size_t db = b.size() - 1;
  const std::size_t n = da + db;
  std::vector<std::vector<FieldElem>> m(n, std::vector<FieldElem>(n, FieldElem(field, 0)));
  for (std::size_t row = 0; row < db; ++row)
    for (std::size_t i = 0; i <= da; ++i) m[row][row + i] = a[da - i];
  for (std::size_t row = 0; row < da; ++row)
    for (std::size_t i = 0; i <= db; ++i) m[db + row][row + i] = b[db - i];
  return determinant(std::move(m), field);
}

// Newton interpolation through (k, values[k]) for k = 0..n-1.
UPoly interpolate(const std::vector<FieldElem>& values, const Field& field) {
  const std::size_t n = values.size();
  std::vector<FieldElem> diffs = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      diffs[i] = (diffs[i] - diffs[i - 1]) / FieldElem(field, static_cast<long>(level));
  UPoly result(field);
  for (std::size_t i = n; i-- > 0;) {
    // result = result * (t - i) + diffs[i]
    result = result * UPoly(field, {FieldElem(field, -static_cast<long>(i)), FieldElem(field, 1)}) +
             UPoly::constant(diffs[i]);
  }
  return result;
}

UPoly upoly_pow(const UPoly& p, std::size_t e) {
  UPoly r = UPoly::constant(FieldElem(p.field(), 1));
  for (std::size_t i = 0; i < e; ++i) r = r * p;
  return r;
}

}  // namespace

UPoly resultant_v(const BiPoly& a, const BiPoly& b) {
  const Field field = a.field();
  if (a.is_zero() || b.is_zero()) return UPoly(field);
  const std::size_t da = a.degree_v();
  const std::size_t db = b.degree_v();
  if (da == 0) return upoly_pow(a.by_v()[0], db);
  if (db == 0) return upoly_pow(b.by_v()[0], da);

  const std::size_t bound =
      std::min(db * a.max_degree_u() + da * b.max_degree_u(), a.total_degree() * b.total_degree());
  std::vector<FieldElem> values;
  values.reserve(bound + 1);
  for (std::size_t k = 0; k <= bound; ++k) {
    const FieldElem u0(field, static_cast<long>(k));
    std::vector<FieldElem> ca, cb;
    for (const UPoly& c : a.by_v()) ca.push_back(c(u0));
    for (const UPoly& c : b.by_v()) cb.push_back(c(u0));
    values.push_back(sylvester_det(ca, cb, field));
  }
  return interpolate(values, field);
}

namespace {

void common_roots_at(const BiPoly& e1, const BiPoly& e2, const FieldElem& u0,
                     std::vector<std::pair<FieldElem, FieldElem>>& out) {
  const UPoly p1 = e1.at_u(u0);
  const UPoly p2 = e2.at_u(u0);
  const UPoly g = gcd(p1, p2);
  if (g.is_zero()) {
    // Every v works; report one representative.
    out.emplace_back(u0, FieldElem(u0.field(), 0));
    return;
  }
  for (FieldElem& r : roots_in_field(g)) out.emplace_back(u0, std::move(r));
}

// Solutions via Res_v; nullopt when the resultant vanishes identically.
std::optional<std::vector<std::pair<FieldElem, FieldElem>>> solve_by_resultant(const BiPoly& e1,
                                                                              const BiPoly& e2) {
  if (e1.degree_v() == 0 && e2.degree_v() == 0) {
    // v is free: the u-roots shared by both equations, each with v = 0.
    std::vector<std::pair<FieldElem, FieldElem>> out;
    const UPoly g = gcd(e1.by_v()[0], e2.by_v()[0]);
    for (FieldElem& r : roots_in_field(g)) out.emplace_back(std::move(r), FieldElem(e1.field(), 0));
    return out;
  }
  const UPoly res = resultant_v(e1, e2);
  if (res.is_zero()) return std::nullopt;
  std::vector<std::pair<FieldElem, FieldElem>> out;
  for (const FieldElem& u0 : roots_in_field(res)) common_roots_at(e1, e2, u0, out);
  return out;
}

}  // namespace

SystemSolutions solve_system(const BiPoly& e1, const BiPoly& e2) {
  const Field field = e1.field();
  SystemSolutions result;
  if (e1.is_zero() && e2.is_zero()) {
    result.points.emplace_back(FieldElem(field, 0), FieldElem(field, 0));
    return result;
  }
  if (e1.is_zero() || e2.is_zero()) {
    // One equation; only its zero set along a few lines can be sampled.
    const BiPoly& e = e1.is_zero() ? e2 : e1;
    result.complete = false;
    for (long k = -3; k <= 3 && result.points.empty(); ++k) {
      const FieldElem u0(field, k);
      const UPoly p = e.at_u(u0);
      if (p.is_zero()) {
        result.points.emplace_back(u0, FieldElem(field, 0));
        break;
      }
      for (FieldElem& r : roots_in_field(p)) result.points.emplace_back(u0, std::move(r));
    }
    return result;
  }

  if (auto pts = solve_by_resultant(e1, e2)) {
    result.points = std::move(*pts);
    return result;
  }
  if (auto pts = solve_by_resultant(e1.swapped(), e2.swapped())) {
    for (auto& [a, b] : *pts) result.points.emplace_back(std::move(b), std::move(a));
    return result;
  }

  // Common curve component: probe a few rational values of u.
  // TODO: split off the bivariate gcd and search its rational points directly.
  result.complete = false;
  for (long num = -6; num <= 6; ++num) {
    for (long den : {1L, 2L, 3L}) {
      Rational value(num, den);
      value.canonicalize();
      const FieldElem u0(field, value);
      common_roots_at(e1, e2, u0, result.points);
    }
  }
  return result;
}

}  // namespace qplane
