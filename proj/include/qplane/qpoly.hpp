#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qplane/scalar.hpp"

namespace qplane {

// Exponents of the normal-ordered term x^x_exp * y^y_exp.
struct ExponentPair {
  unsigned x_exp = 0;
  unsigned y_exp = 0;

  unsigned total() const noexcept { return x_exp + y_exp; }

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

// Graded lexicographic: total degree descending, then x exponent descending.
struct CanonicalOrder {
  bool operator()(const ExponentPair& a, const ExponentPair& b) const noexcept {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.x_exp > b.x_exp;
  }
};

// Degree with a distinguished value for the zero polynomial that compares below
// every finite degree. There is deliberately no conversion to a signed integer.
class Degree {
 public:
  static Degree of_zero() { return Degree(); }
  explicit Degree(unsigned value) : value_(value) {}

  bool is_neg_infinity() const noexcept { return !value_.has_value(); }
  // Throws DegreeOfZero for the zero polynomial.
  unsigned value() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_neg_infinity() || b.is_neg_infinity())
      return a.is_neg_infinity() == b.is_neg_infinity()
                 ? std::strong_ordering::equal
                 : (a.is_neg_infinity() ? std::strong_ordering::less : std::strong_ordering::greater);
    return *a.value_ <=> *b.value_;
  }
  friend Degree operator+(const Degree& a, const Degree& b) {
    if (a.is_neg_infinity() || b.is_neg_infinity()) return of_zero();
    return Degree(*a.value_ + *b.value_);
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

 private:
  Degree() = default;
  std::optional<unsigned> value_;
};

// y^a x^b = q^(a*b) x^b y^a applied to (left) * (right); returns the twist factor and the
// exponent pair of the normal-ordered product.
std::pair<FieldElem, ExponentPair> monomial_mul(const ExponentPair& left, const ExponentPair& right,
                                                const FieldElem& q);

// Element of the quantum plane O_q(F^2): a finite sum of c * x^i y^j with nonzero c,
// kept in x-before-y normal form. Every value carries its own q.
class QPoly {
 public:
  using TermMap = std::map<ExponentPair, FieldElem, CanonicalOrder>;

  // The zero polynomial. Throws ZeroParameter if q == 0.
  explicit QPoly(FieldElem q);

  static QPoly constant(const FieldElem& q, const FieldElem& c);
  static QPoly constant(const FieldElem& q, long c) { return constant(q, FieldElem(q.field(), c)); }
  static QPoly monomial(const FieldElem& q, const FieldElem& c, ExponentPair e);
  static QPoly x(const FieldElem& q) { return monomial(q, FieldElem(q.field(), 1), {1, 0}); }
  static QPoly y(const FieldElem& q) { return monomial(q, FieldElem(q.field(), 1), {0, 1}); }

  const FieldElem& q() const noexcept { return q_; }
  const Field& field() const noexcept { return q_.field(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Zero when absent.
  FieldElem coefficient(const ExponentPair& e) const;
  // Adds c * x^i y^j; zero results are pruned.
  void add_term(const ExponentPair& e, const FieldElem& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  // Constant term value; throws if the polynomial is not constant.
  FieldElem constant_value() const;

  // Leading term in canonical order; throws ZeroInput on the zero polynomial.
  const std::pair<const ExponentPair, FieldElem>& leading_term() const;

  // Largest x (resp. y) exponent; nullopt for the zero polynomial.
  std::optional<unsigned> degree_x() const;
  std::optional<unsigned> degree_y() const;

  bool same_parameters(const QPoly& other) const { return q_ == other.q_; }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const FieldElem& c, const QPoly& f);

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.q_ == b.q_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const QPoly& other) const;

  FieldElem q_;
  TermMap terms_;
};

QPoly add(const QPoly& f, const QPoly& g);
QPoly scalar_mul(const FieldElem& c, const QPoly& f);
QPoly mul(const QPoly& f, const QPoly& g);
QPoly pow(const QPoly& f, unsigned exponent);

Degree degree(const QPoly& f);
std::vector<ExponentPair> support(const QPoly& f);
// 0 and nonzero constants count as homogeneous.
bool is_homogeneous(const QPoly& f);
// Substitutes x -> lambda*x, y -> mu*y.
QPoly scale_vars(const QPoly& f, const FieldElem& lambda, const FieldElem& mu);
bool is_central(const QPoly& f);
// First support element (canonical order) violating the centrality criterion.
std::optional<ExponentPair> non_central_exponent(const QPoly& f);

// Same polynomial multiplied by the inverse of its leading coefficient.
QPoly make_monic(const QPoly& f);

// "x^2*y", or "1" for (0, 0).
std::string to_string(const ExponentPair& e);

// Canonical rendering, e.g. "x^2 - 2*x*y - y^2".
std::string to_string(const QPoly& f);

}  // namespace qplane
