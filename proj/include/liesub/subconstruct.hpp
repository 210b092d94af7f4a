#pragma once

// Completing an h-part to canonical generators: the linear method with
// dense-orbit elements, falling back to polynomial equations on breakdown.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "liesub/chevalley.hpp"
#include "liesub/nilpotent.hpp"
#include "liesub/polysolve.hpp"

namespace liesub {

struct ConstructOptions {
  std::uint64_t seed = kDefaultSeed;
  int trials = kDefaultTrials;
  std::size_t pair_budget = kDefaultPairBudget;
  /// Attempts at specializing free variables of a positive-dimensional system.
  int specializations = 8;
  /// Fresh random runs tried while the outcome is needs_operator.
  int restarts = 16;
};

struct ConstructOutcome {
  enum class Kind { found, not_exist, needs_operator };
  Kind kind = Kind::not_exist;
  CanonicalGenSet gens;
  /// For not_exist: the stage whose system was infeasible.
  std::string certificate;
  /// For needs_operator: the triangular system over the active field.
  std::vector<MultiPoly> system;
  /// Index from which the polynomial method was used (-1: linear only).
  int polynomial_from = -1;
};

/// Generators x_i, y_i found so far, for i < size().
struct PartialGens {
  std::vector<GVector> x;
  std::vector<GVector> y;

  int size() const { return static_cast<int>(x.size()); }
};

/// Value vectors mu_i(h_j) = C(i, j). Throws DegenerateHPart when the
/// h-part is linearly dependent.
std::vector<std::vector<Rational>> functionals(const RootSystem& rs, const CartanMatrix& cartan,
                                               const std::vector<CartanElement>& hpart);

/// (h_1, x_1, y_1) with x_1 in the dense orbit of g(mu_1), or absent.
std::optional<SL2Triple> step_one(const LieAlgebra& L, const std::vector<CartanElement>& hpart,
                                  const std::vector<Rational>& mu1, std::mt19937_64& rng,
                                  int trials = kDefaultTrials);

/// Extends gens by one index with the linear method; absent on breakdown.
std::optional<PartialGens> linear_method_step(const LieAlgebra& L, const std::vector<CartanElement>& hpart,
                                              const CartanMatrix& cartan, const PartialGens& state,
                                              std::mt19937_64& rng, int trials = kDefaultTrials);

/// Solves for all indices from state.size() on at once. Throws
/// BudgetExceeded when the Groebner computation exceeds its budget.
ConstructOutcome polynomial_method(const LieAlgebra& L, const std::vector<CartanElement>& hpart,
                                   const CartanMatrix& cartan, const PartialGens& state, std::mt19937_64& rng,
                                   const ConstructOptions& options = {});

ConstructOutcome construct(const LieAlgebra& L, const CartanMatrix& cartan, const std::vector<CartanElement>& hpart,
                           const ConstructOptions& options = {});

/// Operator-facing text: `ambient=`, `target=`, `hpart=` lines, then the
/// system one polynomial per line.
std::string needs_operator_artifact(const std::string& ambient, const CartanMatrix& cartan,
                                    const std::vector<CartanElement>& hpart, const std::vector<MultiPoly>& system);

}  // namespace liesub
