#include "qplane/primality.hpp"

#include <random>
#include <tuple>

#include "qplane/division.hpp"

namespace qplane {

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::VariableGenerator: return "VariableGenerator";
    case CertificateKind::CommutativeUFD: return "CommutativeUFD";
    case CertificateKind::CentralUnivariateIrreducible: return "CentralUnivariateIrreducible";
    case CertificateKind::QFMinusOne: return "QFMinusOne";
  }
  return "?";
}

std::string reason_name(const NotPrimeReason& reason) {
  struct Visitor {
    std::string operator()(const reason::NotCentral&) const { return "NotCentral"; }
    std::string operator()(const reason::Reducible&) const { return "Reducible"; }
    std::string operator()(const reason::NotMonomialNonRootOfUnity&) const {
      return "NotMonomialNonRootOfUnity";
    }
    std::string operator()(const reason::ExplicitWitness&) const { return "ExplicitWitness"; }
  };
  return std::visit(Visitor{}, reason);
}

std::string to_string(const PrimeVerdict& verdict) {
  struct Visitor {
    std::string operator()(const Prime& p) const {
      return std::string("PRIME (") + to_string(p.certificate) + ")";
    }
    std::string operator()(const NotPrime& np) const {
      std::string detail;
      if (const auto* nc = std::get_if<reason::NotCentral>(&np.reason)) {
        detail = ": " + to_string(nc->offending);
      } else if (const auto* red = std::get_if<reason::Reducible>(&np.reason)) {
        detail = ": " + to_string(red->witness);
      } else if (const auto* w = std::get_if<reason::ExplicitWitness>(&np.reason)) {
        detail = ": f = " + to_string(w->f) + ", g = " + to_string(w->g);
      }
      return "NOT PRIME (" + reason_name(np.reason) + detail + ")";
    }
    std::string operator()(const Unknown&) const { return "UNKNOWN"; }
  };
  return std::visit(Visitor{}, verdict);
}

bool scale_test(const QPoly& p) {
  if (p.is_zero()) throw ZeroInput("scale test of the zero polynomial");
  const auto order = root_of_unity_order(p.q());
  const ExponentPair first = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms()) {
    if (!order) {
      if (!(e == first)) return false;
    } else if (e.x_exp % *order != first.x_exp % *order ||
               e.y_exp % *order != first.y_exp % *order) {
      return false;
    }
  }
  return true;
}

namespace {

bool is_variable_multiple(const QPoly& p) {
  if (!p.is_monomial()) return false;
  const ExponentPair e = p.terms().begin()->first;
  return e.total() == 1;
}

}  // namespace

PrimeVerdict decide_by_theorems(const QPoly& p) {
  if (p.is_constant()) throw ConstantInput("primality is undefined for constants");
  if (is_variable_multiple(p)) return Prime{CertificateKind::VariableGenerator};

  const auto order = root_of_unity_order(p.q());
  if (!order) {
    if (p.is_monomial()) {
      const auto split = factor_homogeneous(p, degree(p).value());
      return NotPrime{reason::Reducible{split.factorization}};
    }
    return NotPrime{reason::NotMonomialNonRootOfUnity{}};
  }

  if (*order == 1) {
    const IrreducibilityVerdict irr = is_irreducible(p);
    switch (irr.kind) {
      case IrreducibilityVerdict::Kind::Irreducible: return Prime{CertificateKind::CommutativeUFD};
      case IrreducibilityVerdict::Kind::Reducible: return NotPrime{reason::Reducible{*irr.witness}};
      case IrreducibilityVerdict::Kind::Unsupported:
        return Unknown{"q = 1 but irreducibility is undecided: " + irr.explanation};
    }
  }

  if (const auto offending = non_central_exponent(p)) return NotPrime{reason::NotCentral{*offending}};

  const IrreducibilityVerdict irr = is_irreducible(p);
  if (irr.kind == IrreducibilityVerdict::Kind::Reducible)
    return NotPrime{reason::Reducible{*irr.witness}};
  if (irr.kind == IrreducibilityVerdict::Kind::Irreducible && univariate_variable(p))
    return Prime{CertificateKind::CentralUnivariateIrreducible};

  const FieldElem minus_one(p.field(), -1);
  if (p.q() == minus_one && p.field().is_real()) {
    if (const auto qf = as_quadratic_form(p)) {
      if (qf->b.is_zero() && quantum_discriminant(*qf).sign() < 0)
        return Prime{CertificateKind::QFMinusOne};
    }
  }
  return Unknown{"central at a root of unity of order " + std::to_string(*order) +
                 ", not covered by a primality theorem"};
}

std::vector<WitnessEntry> builtin_witnesses(Field field) {
  const FieldElem q(field, -1);
  using Terms = std::vector<std::tuple<unsigned, unsigned, long>>;
  auto build = [&](const Terms& terms) {
    QPoly f(q);
    for (const auto& [i, j, c] : terms) f.add_term({i, j}, FieldElem(field, c));
    return f;
  };
  std::vector<WitnessEntry> table;
  // Published pair for x^4 + y^4. Entries are only used after verify_nonprime_witness.
  table.push_back({build({{4, 0, 1}, {0, 4, 1}}),
                   build({{3, 0, 1}, {2, 1, -1}, {1, 2, 1}, {0, 3, -1}}),
                   build({{1, 0, 1}, {2, 0, -1}, {0, 1, -1}, {1, 1, -1}})});
  return table;
}

bool verify_nonprime_witness(const QPoly& p, const QPoly& f, const QPoly& g) {
  return divides(p, f * g) && !divides(p, f) && !divides(p, g);
}

namespace {

// p is a nonzero scalar multiple of entry.
bool same_up_to_scalar(const QPoly& p, const QPoly& entry) {
  if (!p.same_parameters(entry) || p.term_count() != entry.term_count()) return false;
  return make_monic(p) == make_monic(entry);
}

}  // namespace

PrimeVerdict classify_prime(const QPoly& p) {
  PrimeVerdict verdict = decide_by_theorems(p);
  if (!std::holds_alternative<Unknown>(verdict)) return verdict;
  for (WitnessEntry& entry : builtin_witnesses(p.field())) {
    if (!same_up_to_scalar(p, entry.p)) continue;
    if (verify_nonprime_witness(p, entry.f, entry.g))
      return NotPrime{reason::ExplicitWitness{std::move(entry.f), std::move(entry.g)}};
  }
  return verdict;
}

QuaternionPoly quaternion_image(const QPoly& f, const FieldElem& lambda) {
  const Field field = lambda.field();
  const Quaternion x_image = Quaternion::i(field);
  const Quaternion y_image = lambda.inverse() * Quaternion::j(field);
  QuaternionPoly out(field);
  for (const auto& [e, c] : f.terms()) {
    Quaternion coeff = Quaternion::scalar(c);
    for (unsigned n = 0; n < e.x_exp; ++n) coeff = coeff * x_image;
    for (unsigned n = 0; n < e.y_exp; ++n) coeff = coeff * y_image;
    out = out + QuaternionPoly::monomial(coeff, e.total());
  }
  return out;
}

bool quaternion_oracle(const FieldElem& a, const FieldElem& c, std::uint64_t seed, unsigned pairs) {
  if (!a.is_rational() || !c.is_rational())
    throw RootNotRepresentable("a and c must be rational");
  if (a.is_zero() || c.is_zero()) throw RootNotRepresentable("a and c must be nonzero");
  const Rational ratio = -c.rat_part() / a.rat_part();
  const std::int64_t s = squarefree_part(ratio);
  const Field field = s == 1 ? Field::rationals() : Field::quadratic(s);
  const auto lambda = sqrt_in_field(FieldElem(field, ratio));
  if (!lambda) throw RootNotRepresentable("sqrt(" + to_string(ratio) + ") not found");

  const FieldElem q(field, -1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> exponent(0, 3);
  std::uniform_int_distribution<int> size(1, 4);
  auto random_poly = [&] {
    QPoly f(q);
    for (int t = size(rng); t > 0; --t)
      f.add_term({exponent(rng), exponent(rng)}, FieldElem(field, coeff(rng)));
    return f;
  };
  for (unsigned n = 0; n < pairs; ++n) {
    const QPoly f = random_poly();
    const QPoly g = random_poly();
    if (quaternion_image(f * g, *lambda) != quaternion_image(f, *lambda) * quaternion_image(g, *lambda))
      return false;
  }
  const QPoly form = QuadraticForm{FieldElem(field, a.rat_part()), FieldElem(field, 0),
                                   FieldElem(field, c.rat_part()), q}
                         .to_poly();
  return quaternion_image(form, *lambda).is_zero();
}

}  // namespace qplane
