#pragma once

// Weight multiplicities of irreducible modules (Freudenthal), marginal
// character puzzles, and the peeling decision for their solvability.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "liesub/rootsystem.hpp"
#include "liesub/weylequiv.hpp"

namespace liesub {

/// Weight (fundamental-weight coordinates) -> multiplicity.
using WeightMap = std::map<std::vector<int>, std::int64_t>;
/// Exponent -> coefficient.
using LaurentPoly = std::map<int, std::int64_t>;

struct Puzzle {
  std::vector<LaurentPoly> f;
  CartanMatrix cartan;

  friend bool operator==(const Puzzle&, const Puzzle&) = default;
};

/// Full weight diagram of the irreducible module with the given dominant
/// highest weight. Results are cached and shared between threads.
const WeightMap& weight_multiplicities(const CartanMatrix& cartan, const std::vector<int>& highest);

/// Weyl dimension formula.
std::int64_t weyl_dimension(const CartanMatrix& cartan, const std::vector<int>& highest);

/// Marginals of an ambient module restricted to the h-part: each weight
/// nu contributes x_i^{nu(h_i)}. Throws NonIntegralEigenvalue.
Puzzle puzzle_of(const RootSystem& ambient, const HTuple& h_tuple, const WeightMap& module_weights,
                 const CartanMatrix& target);

/// Puzzle of the irreducible target module V(highest) on its own coroots.
Puzzle module_puzzle(const CartanMatrix& target, const std::vector<int>& highest);

inline constexpr std::size_t kDefaultPuzzleMemo = 1'000'000;

/// Whether some direct sum of irreducible modules has these marginals.
bool solvable(const Puzzle& p, std::size_t memo_cap = kDefaultPuzzleMemo);

/// Weights of the smallest nonzero module: per simple factor the smallest
/// fundamental module, summed over the factors.
WeightMap smallest_module(const CartanMatrix& ambient);

}  // namespace liesub
