#include "qplane/qpoly.hpp"

#include <algorithm>

namespace qplane {

unsigned Degree::value() const {
  if (!value_) throw DegreeOfZero("the zero polynomial has no integer degree");
  return *value_;
}

std::pair<FieldElem, ExponentPair> monomial_mul(const ExponentPair& left, const ExponentPair& right,
                                                const FieldElem& q) {
  // x^a y^b * x^c y^d = x^a (y^b x^c) y^d = q^(b*c) x^(a+c) y^(b+d)
  const long twist = static_cast<long>(left.y_exp) * static_cast<long>(right.x_exp);
  return {q.pow(twist), {left.x_exp + right.x_exp, left.y_exp + right.y_exp}};
}

QPoly::QPoly(FieldElem q) : q_(std::move(q)) {
  if (q_.is_zero()) throw ZeroParameter("q must be nonzero");
}

QPoly QPoly::constant(const FieldElem& q, const FieldElem& c) { return monomial(q, c, {0, 0}); }

QPoly QPoly::monomial(const FieldElem& q, const FieldElem& c, ExponentPair e) {
  QPoly f(q);
  f.add_term(e, c);
  return f;
}

FieldElem QPoly::coefficient(const ExponentPair& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElem(field(), 0) : it->second;
}

void QPoly::add_term(const ExponentPair& e, const FieldElem& c) {
  if (c.field() != field())
    throw FieldMismatch("coefficient in " + c.field().to_string() + ", polynomial over " +
                        field().to_string());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool QPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

FieldElem QPoly::constant_value() const {
  if (!is_constant()) throw ConstantInput("polynomial " + qplane::to_string(*this) + " is not constant");
  return coefficient({0, 0});
}

const std::pair<const ExponentPair, FieldElem>& QPoly::leading_term() const {
  if (terms_.empty()) throw ZeroInput("zero polynomial has no leading term");
  return *terms_.begin();
}

std::optional<unsigned> QPoly::degree_x() const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x_exp);
  return d;
}

std::optional<unsigned> QPoly::degree_y() const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.y_exp);
  return d;
}

void QPoly::check_compatible(const QPoly& other) const {
  if (q_.field() != other.q_.field())
    throw ParameterMismatch("fields " + field().to_string() + " and " + other.field().to_string());
  if (q_ != other.q_)
    throw ParameterMismatch("q = " + q_.to_string() + " and q = " + other.q_.to_string());
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  a.check_compatible(b);
  QPoly product(a.q_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto [twist, e] = monomial_mul(ea, eb, a.q_);
      product.add_term(e, twist * ca * cb);
    }
  }
  return product;
}

QPoly operator*(const FieldElem& c, const QPoly& f) {
  if (c.field() != f.field())
    throw FieldMismatch("scalar in " + c.field().to_string() + ", polynomial over " +
                        f.field().to_string());
  QPoly r(f.q_);
  if (c.is_zero()) return r;
  r.terms_ = f.terms_;
  for (auto& [e, coef] : r.terms_) coef *= c;
  return r;
}

QPoly add(const QPoly& f, const QPoly& g) { return f + g; }

QPoly scalar_mul(const FieldElem& c, const QPoly& f) { return c * f; }

QPoly mul(const QPoly& f, const QPoly& g) { return f * g; }

QPoly pow(const QPoly& f, unsigned exponent) {
  QPoly result = QPoly::constant(f.q(), 1);
  QPoly base = f;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Degree degree(const QPoly& f) {
  if (f.is_zero()) return Degree::of_zero();
  // The canonical order puts the largest total degree first.
  return Degree(f.terms().begin()->first.total());
}

std::vector<ExponentPair> support(const QPoly& f) {
  std::vector<ExponentPair> out;
  out.reserve(f.term_count());
  for (const auto& [e, c] : f.terms()) out.push_back(e);
  return out;
}

bool is_homogeneous(const QPoly& f) {
  if (f.is_zero()) return true;
  const unsigned d = f.terms().begin()->first.total();
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [d](const auto& term) { return term.first.total() == d; });
}

QPoly scale_vars(const QPoly& f, const FieldElem& lambda, const FieldElem& mu) {
  QPoly r(f.q());
  for (const auto& [e, c] : f.terms())
    r.add_term(e, lambda.pow(e.x_exp) * mu.pow(e.y_exp) * c);
  return r;
}

std::optional<ExponentPair> non_central_exponent(const QPoly& f) {
  const std::optional<unsigned> order = root_of_unity_order(f.q());
  for (const auto& [e, c] : f.terms()) {
    if (!order) {
      // Only scalars are central.
      if (e.total() != 0) return e;
    } else if (e.x_exp % *order != 0 || e.y_exp % *order != 0) {
      return e;
    }
  }
  return std::nullopt;
}

bool is_central(const QPoly& f) { return !non_central_exponent(f).has_value(); }

QPoly make_monic(const QPoly& f) {
  if (f.is_zero()) return f;
  return f.leading_term().second.inverse() * f;
}

namespace {

std::string monomial_text(const ExponentPair& e) {
  std::string out;
  auto append = [&out](const char* var, unsigned exp) {
    if (exp == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (exp > 1) out += "^" + std::to_string(exp);
  };
  append("x", e.x_exp);
  append("y", e.y_exp);
  return out;
}

// Leading nonzero component negative.
bool looks_negative(const FieldElem& c) {
  if (sgn(c.rat_part()) != 0) return sgn(c.rat_part()) < 0;
  return sgn(c.irr_part()) < 0;
}

}  // namespace

std::string to_string(const ExponentPair& e) {
  const std::string mono = monomial_text(e);
  return mono.empty() ? "1" : mono;
}

std::string to_string(const QPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, coef] : f.terms()) {
    const bool negative = looks_negative(coef);
    const FieldElem magnitude = negative ? -coef : coef;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    const std::string mono = monomial_text(e);
    std::string scalar = magnitude.to_string();
    if (magnitude.is_compound() && scalar.front() != '(') scalar = "(" + scalar + ")";
    if (mono.empty())
      out += scalar;
    else if (magnitude.is_one())
      out += mono;
    else
      out += scalar + "*" + mono;
  }
  return out;
}

}  // namespace qplane
