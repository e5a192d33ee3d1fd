#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qplane/qpoly.hpp"

namespace qplane {

// a x^2 + b xy + c y^2 in O_q.
struct QuadraticForm {
  FieldElem a;
  FieldElem b;
  FieldElem c;
  FieldElem q;

  // Throws NotQuadraticForm unless f is nonzero and homogeneous of degree 2.
  static QuadraticForm from_poly(const QPoly& f);
  QPoly to_poly() const;
};

// unit * factors[0] * factors[1] * ... (in order) reproduces the factored polynomial.
struct Factorization {
  FieldElem unit;
  std::vector<QPoly> factors;

  QPoly product() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Moves every factor's leading coefficient into the unit.
Factorization normalized(Factorization f);

std::string to_string(const Factorization& f);

FieldElem quantum_discriminant(const QuadraticForm& qf);

struct QFReducibility {
  bool reducible = false;
  // Square root of the discriminant when it exists.
  std::optional<FieldElem> witness;
};

// Reducible iff the quantum discriminant is a square in the field.
QFReducibility is_reducible_qf(const QuadraticForm& qf);

// Every ordered factorization into two normalized linear factors; empty when the
// discriminant is not a square.
std::vector<Factorization> factor_qf(const QuadraticForm& qf);

enum class FactorStatus { Factored, Irreducible, Partial };

const char* to_string(FactorStatus status);

// Outcome of one degree split (left factor degree, right factor degree) of a homogeneous core.
struct SplitReport {
  unsigned left_degree = 0;
  unsigned right_degree = 0;
  bool solvable = false;
  // False when the search could not rule the split out.
  bool complete = true;
};

struct HomogeneousFactorResult {
  FactorStatus status = FactorStatus::Irreducible;
  // Always multiplies back to the input; under Partial some factors are unfactored cores.
  Factorization factorization;
  std::vector<QPoly> unfactored;
  // Splits tried on the top-level core, in order.
  std::vector<SplitReport> splits;
};

// Complete factorization of a homogeneous polynomial into irreducible homogeneous factors
// when its degree is at most `cap`; above the cap only x, y and linear factors are peeled.
// Throws NotHomogeneous and ConstantInput.
HomogeneousFactorResult factor_homogeneous(const QPoly& f, unsigned cap = 4);

struct UnivariateFactorResult {
  FactorStatus status = FactorStatus::Irreducible;
  Factorization factorization;
};

// Factorization of a polynomial in F[x] or F[y] over its field. Throws NotUnivariate,
// DegreeCapExceeded and ConstantInput.
UnivariateFactorResult factor_univariate(const QPoly& f, unsigned cap = 4);

struct IrreducibilityVerdict {
  enum class Kind { Irreducible, Reducible, Unsupported };
  Kind kind = Kind::Unsupported;
  std::optional<Factorization> witness;
  std::string explanation;
};

const char* to_string(IrreducibilityVerdict::Kind kind);

// Throws ConstantInput.
IrreducibilityVerdict is_irreducible(const QPoly& f);

// Quadratic form view of f if f is homogeneous of degree 2.
std::optional<QuadraticForm> as_quadratic_form(const QPoly& f);

// Single variable f involves: 'x', 'y', or nullopt for constants and mixed polynomials.
std::optional<char> univariate_variable(const QPoly& f);

}  // namespace qplane
