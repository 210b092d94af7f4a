#pragma once

// Exact arithmetic over Q and over simple extensions Q[t]/(m(t)).

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "liesub/errors.hpp"
#include "liesub/rational.hpp"

namespace liesub {

/// A number field Q[t]/(m(t)) with m monic of degree d >= 1 (d == 1 is Q).
///
/// Specs are interned: equal minimal polynomials share one instance, so
/// fields compare by address and a `const FieldSpec*` is a stable handle
/// for the lifetime of the process.
class FieldSpec {
 public:
  /// The field of rationals, minimal polynomial t.
  static const FieldSpec* rationals();

  /// Coefficients low-to-high, e.g. {3, 0, 1} for t^2 + 3. A non-monic input
  /// is rejected; degree 1 inputs all denote Q.
  static const FieldSpec* intern(const std::vector<Rational>& coefficients);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_rationals() const { return degree() == 1; }
  const std::vector<Rational>& minimal_polynomial() const { return coefficients_; }

  /// Cheap irreducibility evidence: no rational root. Exact for d <= 3.
  bool passes_rational_root_test() const;

  /// Reduction table: t^(d+k) as a vector of d rationals, 0 <= k < d-1.
  const std::vector<std::vector<Rational>>& high_powers() const { return high_powers_; }

  std::string to_string() const;

  explicit FieldSpec(std::vector<Rational> coefficients);

 private:
  std::vector<Rational> coefficients_;
  std::vector<std::vector<Rational>> high_powers_;
};

using Field = const FieldSpec*;

/// An element of a FieldSpec, stored by its coordinates on 1, t, ..., t^(d-1).
class FieldElement {
 public:
  FieldElement() : FieldElement(FieldSpec::rationals()) {}
  explicit FieldElement(Field field);
  FieldElement(Field field, const Rational& value);
  FieldElement(Field field, std::vector<Rational> coords);

  static FieldElement generator(Field field);

  Field field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Coordinate on 1; meaningful when is_rational().
  const Rational& rational_part() const { return coords_.front(); }

  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement& operator*=(const Rational& q);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
  friend FieldElement operator*(const Rational& q, FieldElement a) { return a *= q; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Total order on coordinates; only used for deterministic sorting.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  /// Human-readable, e.g. "1/2 - 3/4*t".
  std::string to_string(const std::string& var = "t") const;

 private:
  void check_same_field(const FieldElement& o) const;

  Field field_;
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline FieldElement inverse(const FieldElement& x) { return x.inverse(); }
inline FieldElement zero_like(const FieldElement& x) { return FieldElement(x.field()); }
inline FieldElement one_like(const FieldElement& x) { return FieldElement(x.field(), Rational(1)); }

enum class ArithOp { add, sub, mul, div };

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Image of x under the homomorphism from -> into sending t to
/// image_of_generator. Throws NotAnEmbedding when the image does not satisfy
/// the minimal polynomial of `from`.
FieldElement field_embed(const FieldElement& x, Field from, Field into,
                         const FieldElement& image_of_generator);

/// Parses "3,0,1" (low-to-high coefficients) into a field; empty means Q.
Field parse_field(const std::string& text);

}  // namespace liesub
