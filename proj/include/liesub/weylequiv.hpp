#pragma once

// W-conjugacy of ordered and unordered tuples of Cartan elements by chamber
// descent inside successive parabolic stabilizers.

#include <cstddef>
#include <optional>
#include <vector>

#include "liesub/chevalley.hpp"
#include "liesub/rootsystem.hpp"

namespace liesub {

inline constexpr std::size_t kDefaultNodeCap = 10'000'000;

/// An ordered h-part with its normalized-form Gram matrix.
struct HTuple {
  std::vector<CartanElement> elements;
  linalg::Mat<Rational> gram;

  int size() const { return static_cast<int>(elements.size()); }
};

HTuple make_htuple(const RootSystem& rs, std::vector<CartanElement> elements);

/// Canonical representative of the ordered tuple under W: the first element
/// is made dominant, each next one is made dominant for the stabilizer of
/// those before it. `witness`, if given, receives w with w(tuple) = result.
std::vector<CartanElement> canonical_ordered(const RootSystem& rs, const std::vector<CartanElement>& tuple,
                                             WeylWord* witness = nullptr);

/// w with w(A_i) = B_i for all i, or absent (always absent when the Gram
/// matrices differ). Throws GramMismatch when the lengths differ.
std::optional<WeylWord> conjugate_ordered(const RootSystem& rs, const HTuple& a, const HTuple& b);

struct SetConjugacy {
  WeylWord word;
  /// w(A[perm[i]]) == B[i].
  std::vector<int> perm;
};

/// w and a Gram-compatible permutation p with w(A_{p(i)}) = B_i, or absent.
/// Throws Undecided when more than `node_cap` search nodes are needed.
std::optional<SetConjugacy> conjugate_sets(const RootSystem& rs, const HTuple& a, const HTuple& b,
                                           std::size_t node_cap = kDefaultNodeCap);

/// Complete invariant of the W-orbit of the underlying set: the
/// lexicographically least canonical_ordered over all orderings, together
/// with one ordering attaining it.
struct SetKey {
  std::vector<CartanElement> elements;
  std::vector<int> order;
};

SetKey set_key(const RootSystem& rs, const HTuple& a, std::size_t node_cap = kDefaultNodeCap);

/// Linear equivalence of two subalgebras given by h-parts in the Cartan
/// subalgebra of L. Throws NotInCartan otherwise.
bool linearly_equivalent(const LieAlgebra& L, const std::vector<GVector>& hpart1, const std::vector<GVector>& hpart2,
                         std::size_t node_cap = kDefaultNodeCap);

}  // namespace liesub
