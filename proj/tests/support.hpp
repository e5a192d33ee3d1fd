#pragma once

// Seeded generators and test-side oracles. The oracles deliberately avoid the library's
// multiplication, factorization and root-finding code.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qplane/factorization.hpp"
#include "qplane/parser.hpp"
#include "qplane/qpoly.hpp"

namespace qtest {

using qplane::ExponentPair;
using qplane::Field;
using qplane::FieldElem;
using qplane::QPoly;
using qplane::Rational;

inline Field q_field() { return Field::rationals(); }

inline FieldElem num(long n, long d = 1, Field f = Field::rationals()) {
  Rational r(n, d);
  r.canonicalize();
  return FieldElem(f, r);
}

inline QPoly P(const std::string& text, const FieldElem& q) {
  return qplane::parse_polynomial(text, qplane::SessionConfig(q, q.field()));
}

inline QPoly P(const std::string& text, long q) { return P(text, num(q)); }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return between(0, 1) == 1; }

  // Nonzero when `nonzero` is set; numerator and denominator bounded by height.
  Rational rational(long height, bool nonzero = false) {
    while (true) {
      Rational r(between(-height, height), between(1, height));
      r.canonicalize();
      if (!nonzero || sgn(r) != 0) return r;
    }
  }

  FieldElem scalar(Field f, long height, bool nonzero = false) {
    if (f.is_rational() || coin()) return FieldElem(f, rational(height, nonzero));
    while (true) {
      FieldElem e = FieldElem::from_parts(f, rational(height), rational(height));
      if (!nonzero || !e.is_zero()) return e;
    }
  }

  QPoly poly(const FieldElem& q, int max_terms, unsigned max_exp, long height) {
    QPoly f(q);
    const long terms = between(0, max_terms);
    for (long t = 0; t < terms; ++t) {
      const unsigned i = static_cast<unsigned>(between(0, max_exp));
      const unsigned j = static_cast<unsigned>(between(0, max_exp));
      f.add_term({i, j}, scalar(q.field(), height, true));
    }
    return f;
  }

  QPoly nonzero_poly(const FieldElem& q, int max_terms, unsigned max_exp, long height) {
    while (true) {
      QPoly f = poly(q, max_terms, max_exp, height);
      if (!f.is_zero()) return f;
    }
  }

  QPoly homogeneous(const FieldElem& q, unsigned degree, long height) {
    QPoly f(q);
    for (unsigned i = 0; i <= degree; ++i) {
      const long c = between(-height, height);
      if (c != 0) f.add_term({i, degree - i}, FieldElem(q.field(), c));
    }
    return f;
  }

  FieldElem pick(const std::vector<FieldElem>& values) {
    return values[static_cast<std::size_t>(between(0, static_cast<long>(values.size()) - 1))];
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Multiplication oracle on words over {x, y}: concatenate, then bubble every "yx" into
// "xy" picking up one factor of q per swap.
class WordPoly {
 public:
  explicit WordPoly(FieldElem q) : q_(std::move(q)) {}

  static WordPoly from(const QPoly& f) {
    WordPoly w(f.q());
    for (const auto& [e, c] : f.terms())
      w.add(std::string(e.x_exp, 'x') + std::string(e.y_exp, 'y'), c);
    return w;
  }

  void add(const std::string& word, const FieldElem& c) {
    auto [it, fresh] = words_.try_emplace(word, c);
    if (!fresh) it->second += c;
  }

  WordPoly times(const WordPoly& other) const {
    WordPoly out(q_);
    for (const auto& [a, ca] : words_)
      for (const auto& [b, cb] : other.words_) out.add(a + b, ca * cb);
    return out;
  }

  QPoly normal_form() const {
    QPoly out(q_);
    for (const auto& [word, c] : words_) {
      std::string w = word;
      FieldElem coef = c;
      bool swapped = true;
      while (swapped) {
        swapped = false;
        for (std::size_t n = 0; n + 1 < w.size(); ++n) {
          if (w[n] == 'y' && w[n + 1] == 'x') {
            w[n] = 'x';
            w[n + 1] = 'y';
            coef = coef * q_;
            swapped = true;
          }
        }
      }
      unsigned xs = 0;
      for (char ch : w) xs += ch == 'x';
      out.add_term({xs, static_cast<unsigned>(w.size()) - xs}, coef);
    }
    return out;
  }

 private:
  FieldElem q_;
  std::map<std::string, FieldElem> words_;
};

// Rational square root by search over numerators and denominators up to `bound`.
inline std::optional<Rational> brute_sqrt(const Rational& r, long bound) {
  for (long d = 1; d <= bound; ++d)
    for (long n = 0; n <= bound; ++n) {
      Rational c(n, d);
      c.canonicalize();
      if (c * c == r) return c;
    }
  return std::nullopt;
}

// Divisors of a nonzero integer, positive and negative.
inline std::vector<long> divisors(long n) {
  std::vector<long> out;
  if (n < 0) n = -n;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(-d);
    }
  return out;
}

// Reducibility of a commutative binary form sum c[i] x^i y^(n-i) with integer coefficients
// over Q (n = 2, 3 or 4). Linear factors come from the rational root test; quadratic factors
// of quartics from Gauss's lemma with an integer coefficient search.
inline bool commutative_form_reducible(const std::vector<long>& c) {
  const std::size_t n = c.size() - 1;
  if (c[0] == 0 || c[n] == 0) return true;  // y or x divides
  // Root t = a/b of sum c[i] t^i: a | c[0], b | c[n].
  for (long a : divisors(c[0]))
    for (long b : divisors(c[n])) {
      if (b < 0) continue;
      Rational t(a, b);
      t.canonicalize();
      Rational value = 0;
      for (std::size_t i = n + 1; i-- > 0;) value = value * t + c[i];
      if (sgn(value) == 0) return true;
    }
  if (n < 4) return false;
  // (p2 t^2 + p1 t + p0)(r2 t^2 + r1 t + r0) with integer p, r.
  for (long p2 : divisors(c[4])) {
    if (p2 < 0) continue;
    const long r2 = c[4] / p2;
    for (long p0 : divisors(c[0])) {
      const long r0 = c[0] / p0;
      // t^3: p2 r1 + r2 p1 = c3 and t^1: p0 r1 + r0 p1 = c1, solved by Cramer's rule.
      const long det = p2 * r0 - r2 * p0;
      if (det != 0) {
        const long n1 = c[3] * r0 - r2 * c[1];
        const long n2 = p2 * c[1] - p0 * c[3];
        if (n1 % det != 0 || n2 % det != 0) continue;
        const long r1 = n1 / det;
        const long p1 = n2 / det;
        if (p2 * r0 + p1 * r1 + p0 * r2 == c[2]) return true;
      } else {
        // Degenerate system: scan p1 within the coefficient height bound.
        for (long p1 = -200; p1 <= 200; ++p1) {
          if (p2 == 0) break;
          const long rem = c[3] - p1 * r2;
          if (rem % p2 != 0) continue;
          const long r1 = rem / p2;
          if (p1 * r0 + p0 * r1 == c[1] && p2 * r0 + p1 * r1 + p0 * r2 == c[2]) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace qtest
