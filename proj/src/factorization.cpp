#include "qplane/factorization.hpp"

#include <algorithm>
#include <stdexcept>

#include "qplane/upoly.hpp"

namespace qplane {

QuadraticForm QuadraticForm::from_poly(const QPoly& f) {
  auto qf = as_quadratic_form(f);
  if (!qf) throw NotQuadraticForm(to_string(f) + " is not a nonzero quadratic form");
  return *qf;
}

std::optional<QuadraticForm> as_quadratic_form(const QPoly& f) {
  if (f.is_zero() || !is_homogeneous(f) || degree(f).value() != 2) return std::nullopt;
  return QuadraticForm{f.coefficient({2, 0}), f.coefficient({1, 1}), f.coefficient({0, 2}), f.q()};
}

QPoly QuadraticForm::to_poly() const {
  QPoly f(q);
  f.add_term({2, 0}, a);
  f.add_term({1, 1}, b);
  f.add_term({0, 2}, c);
  return f;
}

QPoly Factorization::product() const {
  if (factors.empty()) throw ZeroInput("factorization without factors has no q");
  QPoly result = QPoly::constant(factors.front().q(), unit);
  for (const QPoly& f : factors) result = result * f;
  return result;
}

Factorization normalized(Factorization f) {
  for (QPoly& factor : f.factors) {
    const FieldElem lead = factor.leading_term().second;
    f.unit *= lead;
    factor = lead.inverse() * factor;
  }
  return f;
}

std::string to_string(const Factorization& f) {
  std::string out;
  const bool unit_one = f.unit.is_one();
  if (!unit_one) {
    if ((-f.unit).is_one()) {
      out = "-";
    } else {
      std::string scalar = f.unit.to_string();
      if (f.unit.is_compound() && scalar.front() != '(') scalar = "(" + scalar + ")";
      out = scalar + "*";
    }
  }
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i > 0) out += "*";
    const QPoly& factor = f.factors[i];
    if (factor.is_monomial() && factor.leading_term().second.is_one())
      out += to_string(factor);
    else
      out += "(" + to_string(factor) + ")";
  }
  return out;
}

FieldElem quantum_discriminant(const QuadraticForm& qf) {
  return qf.b * qf.b - FieldElem(qf.q.field(), 4) * qf.a * qf.c * qf.q;
}

QFReducibility is_reducible_qf(const QuadraticForm& qf) {
  QFReducibility out;
  out.witness = sqrt_in_field(quantum_discriminant(qf));
  out.reducible = out.witness.has_value();
  return out;
}

namespace {

QPoly linear(const FieldElem& q, const FieldElem& x_coeff, const FieldElem& y_coeff) {
  QPoly f(q);
  f.add_term({1, 0}, x_coeff);
  f.add_term({0, 1}, y_coeff);
  return f;
}

void push_unique(std::vector<Factorization>& out, Factorization f) {
  f = normalized(std::move(f));
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
}

}  // namespace

std::vector<Factorization> factor_qf(const QuadraticForm& qf) {
  std::vector<Factorization> out;
  const Field field = qf.q.field();
  const FieldElem zero(field, 0);
  const FieldElem one(field, 1);
  const FieldElem two(field, 2);
  const auto d = sqrt_in_field(quantum_discriminant(qf));
  if (!d) return out;

  if (!qf.a.is_zero()) {
    // a (x + lambda y)(x + mu y) with lambda = (b + d) / (2aq), mu = (b - d) / (2a).
    for (const FieldElem& root : {*d, -*d}) {
      const FieldElem lambda = (qf.b + root) / (two * qf.a * qf.q);
      const FieldElem mu = (qf.b - root) / (two * qf.a);
      push_unique(out, Factorization{qf.a, {linear(qf.q, one, lambda), linear(qf.q, one, mu)}});
    }
    return out;
  }

  // a = 0: b xy + c y^2 = (b x + c y) * y = y * ((b/q) x + c y).
  const QPoly y = QPoly::y(qf.q);
  if (qf.b.is_zero()) {
    push_unique(out, Factorization{qf.c, {y, y}});
    return out;
  }
  push_unique(out, Factorization{one, {linear(qf.q, qf.b, qf.c), y}});
  push_unique(out, Factorization{one, {y, linear(qf.q, qf.b / qf.q, qf.c)}});
  return out;
}

const char* to_string(FactorStatus status) {
  switch (status) {
    case FactorStatus::Factored: return "FACTORED";
    case FactorStatus::Irreducible: return "IRREDUCIBLE";
    case FactorStatus::Partial: return "PARTIAL";
  }
  return "?";
}

const char* to_string(IrreducibilityVerdict::Kind kind) {
  switch (kind) {
    case IrreducibilityVerdict::Kind::Irreducible: return "IRREDUCIBLE";
    case IrreducibilityVerdict::Kind::Reducible: return "REDUCIBLE";
    case IrreducibilityVerdict::Kind::Unsupported: return "UNSUPPORTED";
  }
  return "?";
}

namespace {

// Unknown coefficients of one factor as polynomials in (u, v).
using Coeffs = std::vector<BiPoly>;

struct SplitSolution {
  QPoly left;
  QPoly right;
};

// Homogeneous coefficient vectors are indexed by the y exponent: g = sum a_i x^(k-i) y^i and
// h = sum b_j x^(n-k-j) y^j, so g*h has coefficient of x^(n-m) y^m equal to
// sum_{i+j=m} q^(i*(n-k-j)) a_i b_j.
class SplitSearch {
 public:
  SplitSearch(const QPoly& core, unsigned n) : core_(core), n_(n), field_(core.field()) {}

  std::optional<SplitSolution> run(unsigned k, SplitReport& report) const {
    report.left_degree = k;
    report.right_degree = n_ - k;
    const unsigned unknowns = std::min(k, n_ - k);
    Coeffs a(k + 1, BiPoly(field_));
    Coeffs b(n_ - k + 1, BiPoly(field_));
    std::vector<BiPoly> equations;
    if (k <= n_ - k)
      build_left_parametrized(k, a, b, equations);
    else
      build_right_parametrized(k, a, b, equations);

    std::vector<std::pair<FieldElem, FieldElem>> points;
    if (unknowns == 1) {
      const BiPoly& e = equations.front();
      if (e.is_zero()) {
        points.emplace_back(zero(), zero());
      } else {
        for (FieldElem& r : roots_in_field(e.by_v()[0])) points.emplace_back(std::move(r), zero());
      }
    } else {
      SystemSolutions sols = solve_system(equations[0], equations[1]);
      report.complete = sols.complete;
      points = std::move(sols.points);
    }
    report.solvable = !points.empty();
    if (points.empty()) return std::nullopt;

    const auto& [u0, v0] = points.front();
    QPoly left(core_.q());
    QPoly right(core_.q());
    for (unsigned i = 0; i <= k; ++i) left.add_term({k - i, i}, evaluate(a[i], u0, v0));
    for (unsigned j = 0; j <= n_ - k; ++j)
      right.add_term({n_ - k - j, j}, evaluate(b[j], u0, v0));
    if (left * right != core_)
      throw std::logic_error("split solution does not reproduce " + to_string(core_));
    return SplitSolution{std::move(left), std::move(right)};
  }

 private:
  FieldElem zero() const { return FieldElem(field_, 0); }
  BiPoly constant(const FieldElem& c) const { return BiPoly::constant(c); }
  BiPoly unknown(unsigned index) const { return index == 1 ? BiPoly::u(field_) : BiPoly::v(field_); }

  FieldElem c(unsigned m) const { return core_.coefficient({n_ - m, m}); }

  FieldElem weight(unsigned k, unsigned i, unsigned j) const {
    return core_.q().pow(static_cast<long>(i) * static_cast<long>(n_ - k - j));
  }

  static FieldElem evaluate(const BiPoly& p, const FieldElem& u0, const FieldElem& v0) {
    return p.at_u(u0)(v0);
  }

  // a_0 = 1 and a_1..a_k unknown; b solved from the lowest n-k+1 coefficients.
  void build_left_parametrized(unsigned k, Coeffs& a, Coeffs& b, std::vector<BiPoly>& eqs) const {
    a[0] = constant(FieldElem(field_, 1));
    for (unsigned i = 1; i <= k; ++i) a[i] = unknown(i);
    for (unsigned m = 0; m <= n_ - k; ++m) {
      BiPoly acc = constant(c(m));
      for (unsigned i = 1; i <= std::min(k, m); ++i)
        acc = acc - weight(k, i, m - i) * (a[i] * b[m - i]);
      b[m] = acc;  // weight(k, 0, m) == 1
    }
    for (unsigned m = n_ - k + 1; m <= n_; ++m) {
      BiPoly acc = constant(-c(m));
      for (unsigned i = m - (n_ - k); i <= k; ++i)
        acc = acc + weight(k, i, m - i) * (a[i] * b[m - i]);
      eqs.push_back(std::move(acc));
    }
  }

  // b_0 = 1 and b_1..b_(n-k) unknown; a solved from the lowest k+1 coefficients.
  void build_right_parametrized(unsigned k, Coeffs& a, Coeffs& b, std::vector<BiPoly>& eqs) const {
    b[0] = constant(FieldElem(field_, 1));
    for (unsigned j = 1; j <= n_ - k; ++j) b[j] = unknown(j);
    for (unsigned m = 0; m <= k; ++m) {
      BiPoly acc = constant(c(m));
      for (unsigned j = 1; j <= std::min(n_ - k, m); ++j)
        acc = acc - weight(k, m - j, j) * (a[m - j] * b[j]);
      a[m] = weight(k, m, 0).inverse() * acc;
    }
    for (unsigned m = k + 1; m <= n_; ++m) {
      BiPoly acc = constant(-c(m));
      for (unsigned j = m - k; j <= n_ - k; ++j)
        acc = acc + weight(k, m - j, j) * (a[m - j] * b[j]);
      eqs.push_back(std::move(acc));
    }
  }

  const QPoly& core_;
  unsigned n_;
  Field field_;
};

struct HomogeneousState {
  unsigned cap;
  FieldElem unit;
  std::vector<QPoly> factors;
  std::vector<QPoly> unfactored;
};

void factor_core(const QPoly& f, HomogeneousState& state, std::vector<SplitReport>* reports) {
  const FieldElem& q = f.q();
  // Peel x^ex on the left and y^ey on the right; neither move introduces a twist.
  unsigned ex = ~0U;
  unsigned ey = ~0U;
  for (const auto& [e, coef] : f.terms()) {
    ex = std::min(ex, e.x_exp);
    ey = std::min(ey, e.y_exp);
  }
  QPoly core(q);
  for (const auto& [e, coef] : f.terms()) core.add_term({e.x_exp - ex, e.y_exp - ey}, coef);
  for (unsigned i = 0; i < ex; ++i) state.factors.push_back(QPoly::x(q));

  const unsigned n = degree(core).value();
  if (n == 0) {
    state.unit *= core.constant_value();
  } else if (n == 1) {
    state.factors.push_back(core);
  } else {
    const SplitSearch search(core, n);
    bool all_complete = true;
    std::optional<SplitSolution> found;
    for (unsigned k = 1; k < n && !found; ++k) {
      if (n > state.cap && k != 1 && k != n - 1) continue;
      SplitReport report;
      found = search.run(k, report);
      all_complete = all_complete && report.complete;
      if (reports) reports->push_back(report);
    }
    if (found) {
      factor_core(found->left, state, nullptr);
      factor_core(found->right, state, nullptr);
    } else {
      if (n > state.cap || !all_complete) state.unfactored.push_back(core);
      state.factors.push_back(core);
    }
  }
  for (unsigned i = 0; i < ey; ++i) state.factors.push_back(QPoly::y(q));
}

}  // namespace

HomogeneousFactorResult factor_homogeneous(const QPoly& f, unsigned cap) {
  if (!is_homogeneous(f)) throw NotHomogeneous(to_string(f) + " is not homogeneous");
  if (f.is_constant()) throw ConstantInput("cannot factor the constant " + to_string(f));

  HomogeneousState state{cap, FieldElem(f.field(), 1), {}, {}};
  HomogeneousFactorResult result;
  factor_core(f, state, &result.splits);

  result.factorization = normalized(Factorization{state.unit, std::move(state.factors)});
  for (const QPoly& core : state.unfactored) result.unfactored.push_back(make_monic(core));
  if (!result.unfactored.empty())
    result.status = FactorStatus::Partial;
  else if (result.factorization.factors.size() == 1)
    result.status = FactorStatus::Irreducible;
  else
    result.status = FactorStatus::Factored;
  return result;
}

std::optional<char> univariate_variable(const QPoly& f) {
  bool has_x = false;
  bool has_y = false;
  for (const auto& [e, c] : f.terms()) {
    has_x = has_x || e.x_exp > 0;
    has_y = has_y || e.y_exp > 0;
  }
  if (has_x == has_y) return std::nullopt;
  return has_x ? 'x' : 'y';
}

namespace {

QPoly from_upoly(const UPoly& p, const FieldElem& q, char var) {
  QPoly f(q);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const unsigned e = static_cast<unsigned>(i);
    f.add_term(var == 'x' ? ExponentPair{e, 0} : ExponentPair{0, e}, p.coeffs()[i]);
  }
  return f;
}

// Monic quartic without roots as a product of two monic quadratics, if possible.
std::optional<std::pair<UPoly, UPoly>> split_quartic(const UPoly& p, bool& complete) {
  const Field field = p.field();
  const BiPoly alpha = BiPoly::u(field);
  const BiPoly beta = BiPoly::v(field);
  auto k = [&](std::size_t i) { return BiPoly::constant(p.coeff(i)); };
  // (t^2 + alpha t + beta)(t^2 + gamma t + delta)
  const BiPoly gamma = k(3) - alpha;
  const BiPoly delta = k(2) - beta - alpha * gamma;
  const BiPoly e1 = alpha * delta + beta * gamma - k(1);
  const BiPoly e2 = beta * delta - k(0);
  const SystemSolutions sols = solve_system(e1, e2);
  complete = sols.complete;
  if (sols.points.empty()) return std::nullopt;
  const auto& [a0, b0] = sols.points.front();
  const FieldElem g0 = p.coeff(3) - a0;
  const FieldElem d0 = p.coeff(2) - b0 - a0 * g0;
  const FieldElem one(field, 1);
  UPoly first(field, {b0, a0, one});
  UPoly second(field, {d0, g0, one});
  if (first * second != p) throw std::logic_error("quartic split does not reproduce " + p.to_string());
  return std::make_pair(std::move(first), std::move(second));
}

}  // namespace

UnivariateFactorResult factor_univariate(const QPoly& f, unsigned cap) {
  if (f.is_constant()) throw ConstantInput("cannot factor the constant " + to_string(f));
  const auto var = univariate_variable(f);
  if (!var) throw NotUnivariate(to_string(f) + " involves both x and y");
  const unsigned n = degree(f).value();
  if (n > cap)
    throw DegreeCapExceeded("degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));

  const Field field = f.field();
  std::vector<FieldElem> coeffs(n + 1, FieldElem(field, 0));
  for (const auto& [e, c] : f.terms()) coeffs[*var == 'x' ? e.x_exp : e.y_exp] = c;
  const UPoly p(field, std::move(coeffs));

  UnivariateFactorResult result;
  Factorization& out = result.factorization;
  out.unit = p.leading();
  UPoly work = p.monic();
  for (const FieldElem& r : roots_in_field(work)) {
    const UPoly linear(field, {-r, FieldElem(field, 1)});
    while (work.degree() > 0 && work(r).is_zero()) {
      work = divmod(work, linear).first;
      out.factors.push_back(from_upoly(linear, f.q(), *var));
    }
  }
  if (work.degree() == 4) {
    bool complete = true;
    if (auto split = split_quartic(work, complete)) {
      out.factors.push_back(from_upoly(split->first, f.q(), *var));
      out.factors.push_back(from_upoly(split->second, f.q(), *var));
      work = UPoly::constant(FieldElem(field, 1));
    } else if (!complete) {
      out.factors.push_back(from_upoly(work, f.q(), *var));
      result.status = FactorStatus::Partial;
      return result;
    }
  }
  if (work.degree() > 0) out.factors.push_back(from_upoly(work, f.q(), *var));
  result.status = out.factors.size() == 1 ? FactorStatus::Irreducible : FactorStatus::Factored;
  return result;
}

IrreducibilityVerdict is_irreducible(const QPoly& f) {
  using Kind = IrreducibilityVerdict::Kind;
  if (f.is_constant()) throw ConstantInput("irreducibility is undefined for constants");
  IrreducibilityVerdict verdict;
  const unsigned n = degree(f).value();

  auto from_status = [&](FactorStatus status, const Factorization& factorization,
                         const char* route) {
    verdict.explanation = route;
    switch (status) {
      case FactorStatus::Irreducible:
        verdict.kind = Kind::Irreducible;
        break;
      case FactorStatus::Factored:
        verdict.kind = Kind::Reducible;
        verdict.witness = factorization;
        break;
      case FactorStatus::Partial:
        if (factorization.factors.size() > 1) {
          verdict.kind = Kind::Reducible;
          verdict.witness = factorization;
        } else {
          verdict.kind = Kind::Unsupported;
          verdict.explanation = std::string(route) + ": undecided core";
        }
        break;
    }
    return verdict;
  };

  if (n == 1) {
    verdict.kind = Kind::Irreducible;
    verdict.explanation = "degree 1";
    return verdict;
  }
  if (f.is_monomial()) {
    const auto r = factor_homogeneous(f, n);
    return from_status(r.status, r.factorization, "monomial");
  }
  if (univariate_variable(f) && n <= 4) {
    const auto r = factor_univariate(f);
    return from_status(r.status, r.factorization, "univariate");
  }
  if (is_homogeneous(f)) {
    const auto r = factor_homogeneous(f);
    if (const auto qf = as_quadratic_form(f)) {
      const auto by_discriminant = is_reducible_qf(*qf);
      if (by_discriminant.reducible != (r.status == FactorStatus::Factored))
        throw std::logic_error("discriminant test and coefficient search disagree on " + to_string(f));
      if (by_discriminant.reducible) {
        verdict.kind = Kind::Reducible;
        verdict.witness = factor_qf(*qf).front();
        verdict.explanation = "quadratic form: discriminant is a square";
      } else {
        verdict.kind = Kind::Irreducible;
        verdict.explanation = "quadratic form: discriminant is not a square";
      }
      return verdict;
    }
    return from_status(r.status, r.factorization, "homogeneous");
  }
  verdict.kind = Kind::Unsupported;
  verdict.explanation = "neither univariate of degree <= 4 nor homogeneous";
  return verdict;
}

}  // namespace qplane
