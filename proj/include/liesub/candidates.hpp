#pragma once

// Candidate h-parts for subalgebras with a given Cartan matrix, built by
// extending h-parts of the leading (r-1)-node submatrix.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liesub/charpuzzle.hpp"
#include "liesub/rootsystem.hpp"

namespace liesub {

enum class CandidateCase { base, attached_single, attached_multi, isolated };

std::string to_string(CandidateCase c);

struct CandidateTuple {
  std::vector<CartanElement> h_part;
  /// Index of the prefix in H_0.
  int parent = -1;
  /// Index of the characteristic whose orbit supplied the last entry.
  int orbit = -1;
  CandidateCase tag = CandidateCase::base;
};

struct CandidateStats {
  std::uint64_t orbits_considered = 0;
  std::uint64_t orbits_swept = 0;
  std::uint64_t theta_rejected = 0;
  std::uint64_t puzzle_rejected = 0;
  std::uint64_t infeasible_prefixes = 0;
  std::uint64_t elements_seen = 0;
  std::uint64_t emitted = 0;
};

/// One line "candidates key=value ..." in a fixed key order.
std::string format_stats(const CandidateStats& s);

/// Node order for a semisimple type: the last node is a leaf of its
/// component, joined by a single bond whenever the type allows it.
/// Returns the Bourbaki block matrix of `t` permuted by that order.
CartanMatrix leaf_last_cartan(const LieType& t);

/// Forced normalized-form value of the last h-part entry given the first
/// r-1. Absent when the last node is isolated. Throws Infeasible when the
/// prefix Gram is not a multiple of the model Gram on its component.
std::optional<Rational> theta_value(const RootSystem& ambient, const CartanMatrix& target,
                                    const std::vector<CartanElement>& prefix);

/// Solvability of the character puzzle of (prefix, rep) on `module`.
bool puzzle_prefilter(const RootSystem& ambient, const std::vector<CartanElement>& prefix, const CartanElement& rep,
                      const CartanMatrix& target, const WeightMap& module);

/// Streams extensions of each tuple in h0 by elements of the orbits of the
/// dominant `characteristics`. With an empty target prefix (r = 1) the
/// characteristics themselves are emitted.
void extend_candidates(const RootSystem& ambient, const CartanMatrix& target,
                       const std::vector<std::vector<CartanElement>>& h0,
                       const std::vector<CartanElement>& characteristics, const WeightMap& module,
                       const std::function<void(const CandidateTuple&)>& sink, CandidateStats* stats = nullptr);

}  // namespace liesub
