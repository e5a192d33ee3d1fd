#pragma once

// Randomized property checks shared by the unit test suite and the acceptance binary.
// Each returns the number of instances run and a description of the first failure.

#include <sstream>
#include <string>

#include "qplane/division.hpp"
#include "qplane/primality.hpp"
#include "support.hpp"

namespace qtest {

struct PropertyResult {
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0; }
};

inline std::vector<FieldElem> standard_qs() {
  const Field f2 = Field::quadratic(2);
  return {num(1), num(-1), num(2), num(-2), num(3, 2), FieldElem::from_parts(f2, 1, 1)};
}

inline PropertyResult ring_axioms(std::uint64_t seed, int count) {
  Gen gen(seed);
  PropertyResult r;
  const std::vector<FieldElem> qs = standard_qs();
  for (int n = 0; n < count; ++n, ++r.instances) {
    const FieldElem q = gen.pick(qs);
    const QPoly a = gen.poly(q, 4, 3, 5), b = gen.poly(q, 4, 3, 5), c = gen.poly(q, 4, 3, 5);
    const QPoly one = QPoly::constant(q, 1), zero(q);
    const auto ctx = [&] { return to_string(a) + " | " + to_string(b) + " | " + to_string(c); };
    if ((a + b) + c != a + (b + c)) r.fail("additive associativity: " + ctx());
    if (a + b != b + a) r.fail("additive commutativity: " + ctx());
    if ((a * b) * c != a * (b * c)) r.fail("multiplicative associativity: " + ctx());
    if (a * (b + c) != a * b + a * c) r.fail("left distributivity: " + ctx());
    if ((a + b) * c != a * c + b * c) r.fail("right distributivity: " + ctx());
    if (a * one != a || one * a != a) r.fail("multiplicative identity: " + ctx());
    if (a + zero != a || !(a + (-a)).is_zero()) r.fail("additive identity/inverse: " + ctx());
    if (!(a * zero).is_zero()) r.fail("zero absorbs: " + ctx());
  }
  return r;
}

inline PropertyResult degree_additivity(std::uint64_t seed, int count) {
  Gen gen(seed);
  PropertyResult r;
  const std::vector<FieldElem> qs = standard_qs();
  for (int n = 0; n < count; ++n, ++r.instances) {
    const FieldElem q = gen.pick(qs);
    const QPoly a = gen.poly(q, 4, 4, 6), b = gen.poly(q, 4, 4, 6);
    if (qplane::degree(a * b) != qplane::degree(a) + qplane::degree(b))
      r.fail("deg(" + to_string(a) + " * " + to_string(b) + ")");
  }
  return r;
}

inline QPoly divisor_with_unit_lead(Gen& gen, const FieldElem& q, qplane::Direction dir) {
  const unsigned k = static_cast<unsigned>(gen.between(0, 3));
  QPoly g(q);
  g.add_term(dir == qplane::Direction::X ? ExponentPair{k, 0} : ExponentPair{0, k},
             gen.scalar(q.field(), 5, true));
  for (int t = 0; k > 0 && t < 3; ++t) {
    const unsigned low = static_cast<unsigned>(gen.between(0, k - 1));
    const unsigned other = static_cast<unsigned>(gen.between(0, 3));
    g.add_term(dir == qplane::Direction::X ? ExponentPair{low, other} : ExponentPair{other, low},
               gen.scalar(q.field(), 5, true));
  }
  return g;
}

inline PropertyResult divmod_roundtrip(std::uint64_t seed, int count) {
  using qplane::Direction;
  using qplane::Side;
  Gen gen(seed);
  PropertyResult r;
  const std::vector<FieldElem> qs = standard_qs();
  for (int n = 0; n < count; ++n, ++r.instances) {
    const FieldElem q = gen.pick(qs);
    const Direction dir = gen.coin() ? Direction::X : Direction::Y;
    const Side side = gen.coin() ? Side::Left : Side::Right;
    const QPoly g = divisor_with_unit_lead(gen, q, dir);
    const QPoly f = gen.poly(q, 6, 5, 7);
    const qplane::DivisionResult d = qplane::divmod(f, g, side, dir);
    const QPoly rebuilt = side == Side::Right ? d.quotient * g + d.remainder : g * d.quotient + d.remainder;
    const auto deg = [dir](const QPoly& h) { return dir == Direction::X ? h.degree_x() : h.degree_y(); };
    if (rebuilt != f) r.fail("reconstruction: " + to_string(f) + " by " + to_string(g));
    else if (!d.remainder.is_zero() && *deg(d.remainder) >= *deg(g))
      r.fail("remainder degree: " + to_string(f) + " by " + to_string(g));
  }
  return r;
}

inline PropertyResult quaternion_relations() {
  using qplane::Quaternion;
  PropertyResult r;
  const Field f = Field::rationals();
  const Quaternion i = Quaternion::i(f), j = Quaternion::j(f), k = Quaternion::k(f);
  const Quaternion m1 = -Quaternion::one(f);
  const std::pair<bool, const char*> checks[] = {
      {i * i == m1, "i^2"},      {j * j == m1, "j^2"},     {k * k == m1, "k^2"},
      {i * j * k == m1, "ijk"},  {i * j == k, "ij"},       {j * i == -k, "ji"},
      {j * k == i, "jk"},        {k * i == j, "ki"},
  };
  for (const auto& [ok, name] : checks) {
    ++r.instances;
    if (!ok) r.fail(name);
  }
  return r;
}

// psi(f g) = psi(f) psi(g) at q = -1 for 50 seeded pairs per lambda.
inline PropertyResult quaternion_multiplicativity(std::uint64_t seed, int pairs) {
  PropertyResult r;
  const Field f2 = Field::quadratic(2);
  const std::vector<FieldElem> lambdas{num(1), num(2), num(-3, 2), FieldElem::generator(f2)};
  for (const FieldElem& lambda : lambdas) {
    Gen gen(seed);
    const FieldElem q(lambda.field(), -1);
    for (int n = 0; n < pairs; ++n, ++r.instances) {
      const QPoly a = gen.poly(q, 4, 3, 5), b = gen.poly(q, 4, 3, 5);
      if (qplane::quaternion_image(a * b, lambda) !=
          qplane::quaternion_image(a, lambda) * qplane::quaternion_image(b, lambda))
        r.fail("lambda " + lambda.to_string() + ": " + to_string(a) + " * " + to_string(b));
    }
  }
  return r;
}

// Random integer binary form of the given degree at q = 1; half of them built as products.
inline QPoly commutative_form(Gen& gen, unsigned degree, std::vector<long>& coeffs) {
  const FieldElem one = num(1);
  QPoly f(one);
  if (gen.coin()) {
    const unsigned left = static_cast<unsigned>(gen.between(1, degree - 1));
    f = gen.homogeneous(one, left, 4) * gen.homogeneous(one, degree - left, 4);
  } else {
    f = gen.homogeneous(one, degree, 9);
  }
  coeffs.assign(degree + 1, 0);
  for (const auto& [e, c] : f.terms()) coeffs[e.x_exp] = c.rat_part().get_num().get_si();
  return f;
}

inline PropertyResult commutative_factor_oracle(std::uint64_t seed, int count) {
  Gen gen(seed);
  PropertyResult r;
  while (r.instances < count) {
    const unsigned degree = gen.coin() ? 3 : 4;
    std::vector<long> coeffs;
    const QPoly f = commutative_form(gen, degree, coeffs);
    if (f.is_zero()) continue;
    ++r.instances;
    const qplane::HomogeneousFactorResult h = qplane::factor_homogeneous(f);
    const bool oracle = commutative_form_reducible(coeffs);
    const bool mine = h.status == qplane::FactorStatus::Factored;
    if (h.status == qplane::FactorStatus::Partial) r.fail("partial: " + to_string(f));
    else if (mine != oracle) r.fail("verdict: " + to_string(f));
    else if (h.factorization.product() != f) r.fail("product: " + to_string(f));
  }
  return r;
}

// Discriminant-square verdict against the bilinear split search of factor_homogeneous.
inline PropertyResult qf_agreement(std::uint64_t seed, int count) {
  Gen gen(seed);
  PropertyResult r;
  const std::vector<FieldElem> qs{num(1), num(-1), num(2), num(-2), num(3, 2)};
  while (r.instances < count) {
    const FieldElem q = gen.pick(qs);
    const QPoly f = gen.homogeneous(q, 2, 10);
    if (f.is_zero()) continue;
    ++r.instances;
    const qplane::QuadraticForm form = qplane::QuadraticForm::from_poly(f);
    const bool by_discriminant = qplane::is_reducible_qf(form).reducible;
    const qplane::HomogeneousFactorResult h = qplane::factor_homogeneous(f);
    const bool by_search = h.status == qplane::FactorStatus::Factored;
    if (by_discriminant != by_search) {
      r.fail("q = " + q.to_string() + ": " + to_string(f));
      continue;
    }
    if (h.factorization.product() != f) r.fail("search product: " + to_string(f));
    for (const qplane::Factorization& fz : qplane::factor_qf(form))
      if (fz.product() != f) r.fail("factor_qf product: " + to_string(f));
  }
  return r;
}

}  // namespace qtest
