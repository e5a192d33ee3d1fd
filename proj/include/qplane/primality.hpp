#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qplane/factorization.hpp"
#include "qplane/quaternion.hpp"

namespace qplane {

// Which result certifies primality.
enum class CertificateKind {
  VariableGenerator,             // p is a scalar multiple of x or y
  CommutativeUFD,                // q = 1 and p irreducible
  CentralUnivariateIrreducible,  // p in F[x] or F[y], central and irreducible
  QFMinusOne,                    // q = -1, a x^2 + c y^2 with negative discriminant over a real field
};

const char* to_string(CertificateKind kind);

namespace reason {

struct NotCentral {
  ExponentPair offending;
};
struct Reducible {
  Factorization witness;
};
// q is not a root of unity and p is not a scalar multiple of x or y.
struct NotMonomialNonRootOfUnity {};
// p | f*g while p divides neither f nor g.
struct ExplicitWitness {
  QPoly f;
  QPoly g;
};

}  // namespace reason

using NotPrimeReason = std::variant<reason::NotCentral, reason::Reducible,
                                    reason::NotMonomialNonRootOfUnity, reason::ExplicitWitness>;

struct Prime {
  CertificateKind certificate;
};
struct NotPrime {
  NotPrimeReason reason;
};
struct Unknown {
  std::string explanation;
};

using PrimeVerdict = std::variant<Prime, NotPrime, Unknown>;

// "PRIME (VariableGenerator)", "NOT PRIME (NotCentral: x*y)", "UNKNOWN", ...
std::string to_string(const PrimeVerdict& verdict);
std::string reason_name(const NotPrimeReason& reason);

// Necessary condition for primality: q^i p(x/q, y) and q^j p(x, y/q) both equal p. Holds iff
// all x exponents in the support agree modulo ord(q), and likewise all y exponents; when q is
// not a root of unity this means p is a monomial. Throws ZeroInput.
bool scale_test(const QPoly& p);

// The theorem-based decision procedure alone; never consults the witness table.
PrimeVerdict decide_by_theorems(const QPoly& p);

// decide_by_theorems, then, for an Unknown verdict, the built-in witness table.
// Throws ConstantInput.
PrimeVerdict classify_prime(const QPoly& p);

// divides(p, f*g) and neither divides(p, f) nor divides(p, g). Throws UnsupportedDivisor.
bool verify_nonprime_witness(const QPoly& p, const QPoly& f, const QPoly& g);

// Known (p, f, g) non-primality witnesses at q = -1 with rational coefficients.
struct WitnessEntry {
  QPoly p;
  QPoly f;
  QPoly g;
};
// Entries expressed over `field` (coefficients embedded from Q).
std::vector<WitnessEntry> builtin_witnesses(Field field);

// Image of f under x -> i t, y -> lambda^-1 j t in H[t] (quaternions over lambda's field).
QuaternionPoly quaternion_image(const QPoly& f, const FieldElem& lambda);

// Independent check of the q = -1 quadratic form a x^2 + c y^2: builds lambda = sqrt(-c/a)
// in Q or Q(sqrt s), then confirms that the image map is multiplicative on `pairs` seeded
// random pairs and that it sends a x^2 + c y^2 to zero. a and c must be rational.
// Throws RootNotRepresentable.
bool quaternion_oracle(const FieldElem& a, const FieldElem& c, std::uint64_t seed = 20240611,
                       unsigned pairs = 50);

}  // namespace qplane
