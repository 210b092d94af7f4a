#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liesub {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p" for integers, "p/q" otherwise (lowest terms, sign on the numerator).
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q"; whitespace is not allowed.
Rational parse_rational(std::string_view text);

/// p/q in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Converts an integral rational that fits in 64 bits; throws otherwise.
std::int64_t to_int64(const Rational& q);

/// Least common multiple of the denominators.
Integer common_denominator(const std::vector<Rational>& v);

// Scalar protocol shared with FieldElement so the exact linear algebra and
// polynomial templates can run over either.
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational inverse(const Rational& q) { return Rational(1) / q; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

}  // namespace liesub
