#pragma once

// Multivariate polynomials over a number field, reduced Groebner bases by
// Buchberger's algorithm, and triangular back-substitution for
// zero-dimensional lexicographic bases.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liesub/field.hpp"

namespace liesub {

using Monomial = std::vector<int>;

/// lex compares exponents from the first variable on; grevlex compares
/// total degree, then prefers the smaller exponent in the last variable.
enum class MonomialOrder { lex, grevlex };

/// True when a is strictly smaller than b.
bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order);

class MultiPoly {
 public:
  MultiPoly(int nvars, Field field);

  static MultiPoly constant(int nvars, const FieldElement& c);
  static MultiPoly variable(int nvars, int index, Field field);

  int nvars() const { return nvars_; }
  Field field() const { return field_; }
  const std::map<Monomial, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Nonzero constant.
  bool is_unit() const;

  /// Adds c * m; terms that cancel are removed.
  void add_term(const Monomial& m, const FieldElement& c);

  /// Leading monomial and coefficient under the order; the polynomial must be nonzero.
  const Monomial& leading_monomial(MonomialOrder order) const;
  const FieldElement& leading_coefficient(MonomialOrder order) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const FieldElement& c);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  FieldElement evaluate(const std::vector<FieldElement>& point) const;
  /// Replaces variable i by the value c (the variable count is unchanged).
  MultiPoly substitute(int index, const FieldElement& c) const;

  /// Terms in decreasing lex order, e.g. "x1^2*x2^1 - 3*x2^1 + 1".
  std::string to_string() const;

 private:
  int nvars_;
  Field field_;
  std::map<Monomial, FieldElement> terms_;
};

inline constexpr std::size_t kDefaultPairBudget = 200'000;

struct GroebnerBasis {
  std::vector<MultiPoly> generators;
  MonomialOrder order = MonomialOrder::lex;

  bool is_one() const { return generators.size() == 1 && generators.front().is_unit(); }
};

/// Reduced Groebner basis, monic, sorted by decreasing leading monomial.
/// Throws BudgetExceeded after `pair_budget` S-pairs.
GroebnerBasis groebner(const std::vector<MultiPoly>& gens, MonomialOrder order = MonomialOrder::lex,
                       std::size_t pair_budget = kDefaultPairBudget);

/// Remainder of full reduction by the basis.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb);

/// A largest set of variables containing no leading monomial of the basis.
std::vector<int> independent_variables(const GroebnerBasis& gb);

/// Square root in the field of x when one can be found exactly: always
/// decided over Q and over quadratic fields.
std::optional<FieldElement> field_sqrt(const FieldElement& x);

struct SolveOutcome {
  enum class Kind { no_solution, solutions, needs_extension };
  Kind kind = Kind::no_solution;
  std::vector<std::vector<FieldElement>> points;
  /// Whether every point over the active field was found.
  bool complete = true;
  /// The unsolved triangular system, for needs_extension.
  std::vector<MultiPoly> system;
};

/// Throws NotZeroDimensional naming the free variables.
SolveOutcome solve_zero_dim(const GroebnerBasis& gb);

/// One polynomial per line with explicit exponents.
std::string format_system(const std::vector<MultiPoly>& polys);

}  // namespace liesub
