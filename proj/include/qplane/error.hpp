#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qplane {

// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QPLANE_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

// scalars
QPLANE_DEFINE_ERROR(DivisionByZero);
QPLANE_DEFINE_ERROR(FieldMismatch);
QPLANE_DEFINE_ERROR(InvalidField);
QPLANE_DEFINE_ERROR(ZeroParameter);
QPLANE_DEFINE_ERROR(NotReal);

// qplane-core
QPLANE_DEFINE_ERROR(ParameterMismatch);
QPLANE_DEFINE_ERROR(DegreeOfZero);

// skew-division
QPLANE_DEFINE_ERROR(ZeroDivisor);
QPLANE_DEFINE_ERROR(NonUnitLeadingCoefficient);
QPLANE_DEFINE_ERROR(UnsupportedDivisor);

// factorization
QPLANE_DEFINE_ERROR(NotHomogeneous);
QPLANE_DEFINE_ERROR(NotQuadraticForm);
QPLANE_DEFINE_ERROR(DegreeCapExceeded);
QPLANE_DEFINE_ERROR(NotUnivariate);
QPLANE_DEFINE_ERROR(ConstantInput);

// primality
QPLANE_DEFINE_ERROR(ZeroInput);
QPLANE_DEFINE_ERROR(RootNotRepresentable);

// parser
QPLANE_DEFINE_ERROR(UnknownSymbol);
QPLANE_DEFINE_ERROR(RadicalOutsideField);

#undef QPLANE_DEFINE_ERROR

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("SyntaxError at " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qplane
