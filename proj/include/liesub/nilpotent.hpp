#pragma once

// Characteristics of nilpotent orbits and sl2-triple completion inside
// graded pieces of a Lie algebra.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "liesub/chevalley.hpp"

namespace liesub {

/// Default number of random attempts at a dense-orbit element.
inline constexpr int kDefaultTrials = 25;
/// Default seed for every pseudo-random search in the library.
inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct Characteristic {
  CartanElement labels;
  std::uint64_t orbit_size = 0;
  SL2Triple triple;
};

/// Root-vector basis indices b with root(b) evaluated on every hs[k] equal
/// to values[k]; for all-zero values the Cartan basis is appended.
std::vector<int> graded_piece(const LieAlgebra& L, const std::vector<CartanElement>& hs,
                              const std::vector<Rational>& values);

/// Result of searching e in span(plus) with [zero_part, e] = span(plus) and
/// then f in span(minus) with [e, f] = h.
struct DenseOrbitSearch {
  std::optional<SL2Triple> triple;
  /// Whether some trial element met the dense-orbit rank condition.
  bool dense_found = false;
};

/// Tries `trials` random elements with integer coefficients in [-3, 3].
/// When no trial passes the rank test and `fallback` is set, the linear
/// system for f is still attempted for every trial element.
DenseOrbitSearch find_sl2_in_pieces(const LieAlgebra& L, const GVector& h, const std::vector<GVector>& zero_part,
                                    const std::vector<GVector>& plus, const std::vector<GVector>& minus,
                                    std::mt19937_64& rng, int trials, bool fallback);

/// An sl2-triple (h, e, f) with e in g(2) and f in g(-2) relative to h, or
/// absent if none exists.
std::optional<SL2Triple> admissible_test(const LieAlgebra& L, const CartanElement& h,
                                         std::uint64_t seed = kDefaultSeed, int trials = kDefaultTrials);

/// One dominant characteristic per nonzero nilpotent orbit, from the sweep
/// of label vectors with entries in [0, label_bound].
std::vector<Characteristic> characteristics(const LieAlgebra& L, int label_bound = 2);

}  // namespace liesub
