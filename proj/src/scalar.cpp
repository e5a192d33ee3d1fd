#include "qplane/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <regex>

namespace qplane {

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return false;
  }
  return true;
}

namespace {

// Squarefree part of a positive integer by trial division.
Integer squarefree_kernel(Integer n) {
  Integer kernel = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned count = 0;
    while (n % p == 0) {
      n /= p;
      ++count;
    }
    if (count % 2 == 1) kernel *= p;
  }
  return kernel * n;
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (sgn(r) < 0) return false;
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return false;
  Integer n_root, d_root;
  mpz_sqrt(n_root.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(d_root.get_mpz_t(), den.get_mpz_t());
  root = Rational(n_root, d_root);
  root.canonicalize();
  return true;
}

}  // namespace

std::int64_t squarefree_part(const Rational& r) {
  if (sgn(r) == 0) throw DivisionByZero("squarefree part of zero");
  // r = n/d = n*d / d^2, so the kernel of |n*d| carries the sign of r.
  Integer product = abs(r.get_num()) * r.get_den();
  Integer kernel = squarefree_kernel(product);
  if (!kernel.fits_slong_p()) throw InvalidField("radicand out of range: " + kernel.get_str());
  std::int64_t s = kernel.get_si();
  return sgn(r) < 0 ? -s : s;
}

Field Field::quadratic(std::int64_t radicand) {
  if (radicand == 0 || radicand == 1 || !is_squarefree(radicand))
    throw InvalidField("radicand must be squarefree and not 0 or 1, got " +
                       std::to_string(radicand));
  return Field(radicand);
}

Field Field::parse(std::string_view text) {
  static const std::regex rational_re(R"(^\s*(Q|QQ)\s*$)");
  static const std::regex quadratic_re(R"(^\s*Q\(\s*sqrt\s*(\(\s*(-?\d+)\s*\)|(-?\d+))\s*\)\s*$)");
  std::string s(text);
  std::smatch match;
  if (std::regex_match(s, match, rational_re)) return rationals();
  if (std::regex_match(s, match, quadratic_re)) {
    std::string digits = match[2].matched ? match[2].str() : match[3].str();
    std::int64_t radicand = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), radicand);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw InvalidField("radicand out of range in '" + s + "'");
    return quadratic(radicand);
  }
  throw InvalidField("expected Q or Q(sqrt s), got '" + s + "'");
}

std::string Field::to_string() const {
  if (is_rational()) return "Q";
  return "Q(sqrt " + std::to_string(radicand_) + ")";
}

FieldElem FieldElem::from_parts(Field field, Rational rat, Rational irr) {
  if (field.is_rational() && sgn(irr) != 0)
    throw FieldMismatch("irrational part given for an element of Q");
  FieldElem e(field, std::move(rat));
  e.irr_ = std::move(irr);
  return e;
}

FieldElem FieldElem::generator(Field field) {
  if (field.is_rational()) throw FieldMismatch("Q has no generator sqrt(s)");
  return from_parts(field, 0, 1);
}

void FieldElem::check_same_field(const FieldElem& other) const {
  if (field_ != other.field_)
    throw FieldMismatch(field_.to_string() + " vs " + other.field_.to_string());
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  r.rat_ = -r.rat_;
  r.irr_ = -r.irr_;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& other) {
  check_same_field(other);
  rat_ += other.rat_;
  irr_ += other.irr_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& other) {
  check_same_field(other);
  rat_ -= other.rat_;
  irr_ -= other.irr_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& other) {
  check_same_field(other);
  const Rational s = field_.radicand();
  Rational rat = rat_ * other.rat_ + s * irr_ * other.irr_;
  Rational irr = rat_ * other.irr_ + irr_ * other.rat_;
  rat_ = std::move(rat);
  irr_ = std::move(irr);
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

Rational FieldElem::norm() const { return rat_ * rat_ - Rational(field_.radicand()) * irr_ * irr_; }

FieldElem FieldElem::conjugate() const { return from_parts(field_, rat_, -irr_); }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  // 1/(a + b sqrt s) = (a - b sqrt s) / (a^2 - s b^2); the norm is nonzero since s is not a square.
  Rational n = norm();
  return from_parts(field_, rat_ / n, -irr_ / n);
}

FieldElem FieldElem::pow(long exponent) const {
  FieldElem base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
  FieldElem result(field_, 1);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

int FieldElem::sign() const {
  if (!field_.is_real()) throw NotReal(field_.to_string() + " has no ordering");
  int a = sgn(rat_);
  int b = sgn(irr_);
  if (b == 0) return a;
  if (a == 0 || a == b) return b;
  // Opposite signs: compare rat^2 with s*irr^2.
  int cmp_val = cmp(rat_ * rat_, Rational(field_.radicand()) * irr_ * irr_);
  return cmp_val > 0 ? a : b;
}

std::string FieldElem::to_string() const {
  if (sgn(irr_) == 0) return qplane::to_string(rat_);
  const std::string radical = "sqrt(" + std::to_string(field_.radicand()) + ")";
  Integer den;
  mpz_lcm(den.get_mpz_t(), rat_.get_den().get_mpz_t(), irr_.get_den().get_mpz_t());
  Integer a = rat_.get_num() * (den / rat_.get_den());
  Integer b = irr_.get_num() * (den / irr_.get_den());

  std::string irr_text;
  Integer abs_b = abs(b);
  if (abs_b == 1)
    irr_text = radical;
  else
    irr_text = abs_b.get_str() + "*" + radical;

  std::string numerator;
  if (sgn(a) == 0) {
    numerator = (sgn(b) < 0 ? "-" : "") + irr_text;
    if (den == 1) return numerator;
    return numerator + "/" + den.get_str();
  }
  numerator = a.get_str() + (sgn(b) < 0 ? "-" : "+") + irr_text;
  if (den == 1) return numerator;
  return "(" + numerator + ")/" + den.get_str();
}

std::optional<FieldElem> sqrt_in_field(const FieldElem& e) {
  const Field& field = e.field();
  if (e.is_zero()) return FieldElem(field, 0);

  Rational root;
  if (field.is_rational()) {
    if (!rational_sqrt(e.rat_part(), root)) return std::nullopt;
    return FieldElem(field, root);
  }

  const Rational s = field.radicand();
  const Rational& A = e.rat_part();
  const Rational& B = e.irr_part();

  if (sgn(B) == 0) {
    // (u + v sqrt s)^2 has irr part 2uv, so u = 0 or v = 0.
    if (rational_sqrt(A, root)) return FieldElem(field, root);
    if (rational_sqrt(A / s, root)) return FieldElem::from_parts(field, 0, root);
    return std::nullopt;
  }

  // u^2 + s v^2 = A, 2uv = B  =>  4u^4 - 4A u^2 + s B^2 = 0  =>  u^2 = (A +- sqrt(N)) / 2
  // with N = A^2 - s B^2 the norm of e.
  Rational norm_root;
  if (!rational_sqrt(e.norm(), norm_root)) return std::nullopt;
  for (const Rational& u_sq : {Rational((A + norm_root) / 2), Rational((A - norm_root) / 2)}) {
    Rational u;
    if (sgn(u_sq) <= 0 || !rational_sqrt(u_sq, u)) continue;
    Rational v = B / (2 * u);
    // u > 0 already, which is the preferred sign.
    FieldElem d = FieldElem::from_parts(field, u, v);
    if (d * d == e) return d;
  }
  return std::nullopt;
}

std::optional<unsigned> root_of_unity_order(const FieldElem& q) {
  if (q.is_zero()) throw ZeroParameter("q must be nonzero");
  for (unsigned n : std::array<unsigned, 5>{1, 2, 3, 4, 6}) {
    if (q.pow(static_cast<long>(n)).is_one()) return n;
  }
  return std::nullopt;
}

}  // namespace qplane
