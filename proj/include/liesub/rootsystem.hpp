#pragma once

// Root systems from Cartan matrices, the Weyl group action on h_R (label
// coordinates) and on h_R^* (fundamental-weight coordinates), dominant
// chamber reduction and a stack-bounded orbit traversal.
//
// Convention: C(i,j) = <alpha_i, alpha_j^vee>, so alpha_i(h_j) = C(i,j)
// for the simple coroots h_i. Simple components follow Bourbaki numbering.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "liesub/errors.hpp"
#include "liesub/linalg.hpp"
#include "liesub/rational.hpp"

namespace liesub {

using CartanMatrix = std::vector<std::vector<int>>;
using RootVec = std::vector<int>;

/// One simple factor of a semisimple type, e.g. {'B', 3}.
struct SimpleType {
  char letter = 'A';
  int rank = 1;

  std::string to_string() const { return std::string(1, letter) + std::to_string(rank); }
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// A semisimple type as a sorted list of simple factors.
struct LieType {
  std::vector<SimpleType> components;

  int rank() const;
  /// "A1+B2"; the empty type prints as "0".
  std::string to_string() const;
  /// Block-diagonal Cartan matrix, components in stored order.
  CartanMatrix cartan_matrix() const;
  /// Dimension of the Lie algebra of this type.
  int dimension() const;
  friend auto operator<=>(const LieType&, const LieType&) = default;
};

/// Parses `<Letter><rank>` joined by `+`, whitespace-insensitive; also
/// accepts a multiplicity prefix as in "2A1". Components are sorted.
LieType parse_type(const std::string& text);

/// Bourbaki-numbered Cartan matrix of a simple type; throws InvalidType.
CartanMatrix simple_cartan_matrix(SimpleType t);

/// Connected components of the Dynkin diagram, each a sorted node list.
std::vector<std::vector<int>> diagram_components(const CartanMatrix& c);

/// Validates a Cartan matrix of finite type and identifies it.
/// Returns the sorted type together with a node order `order` such that
/// c restricted to order equals type.cartan_matrix(). Throws
/// InvalidCartanMatrix.
std::pair<LieType, std::vector<int>> identify(const CartanMatrix& c);

/// All node permutations p with c(p[i], p[j]) == d(i, j).
std::vector<std::vector<int>> cartan_isomorphisms(const CartanMatrix& c, const CartanMatrix& d,
                                                  std::size_t limit = SIZE_MAX);

/// Element of h_R in label coordinates: labels[i] = alpha_i(h).
struct CartanElement {
  std::vector<Rational> labels;

  bool is_dominant() const;
  friend bool operator==(const CartanElement&, const CartanElement&) = default;
};

/// A product of simple reflections s_{w[0]} s_{w[1]} ... ; the rightmost
/// letter acts first, so apply(w1 + w2) == apply(w1) o apply(w2).
struct WeylWord {
  std::vector<int> word;

  WeylWord inverse() const;
  friend WeylWord operator*(const WeylWord& a, const WeylWord& b);
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

/// Whether a vector is acted on as an element of h (labels) or of h^*
/// (coordinates on fundamental weights).
enum class Action { coweight, weight };

/// Instrumentation for orbit traversal memory.
struct OrbitStats {
  std::size_t visited = 0;
  std::size_t max_depth = 0;
  /// Peak number of scalars held on the traversal stack.
  std::size_t peak_stack_words = 0;
};

class RootSystem {
 public:
  explicit RootSystem(CartanMatrix cartan);

  int rank() const { return static_cast<int>(cartan_.size()); }
  const CartanMatrix& cartan() const { return cartan_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }

  /// Positive roots in simple-root coordinates, by height then
  /// lexicographically descending (so simple roots come first, in order).
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  int height(int positive_index) const { return heights_[positive_index]; }

  /// (alpha_i, alpha_i) with short roots of each component of length 2.
  const std::vector<Rational>& simple_root_norms() const { return norms_; }
  /// ((alpha_i, alpha_j)) in the same normalization.
  const linalg::Mat<Rational>& bilinear_form() const { return form_; }
  /// (beta, gamma) for vectors in simple-root coordinates.
  Rational inner(const RootVec& beta, const RootVec& gamma) const;

  /// Index in [0, 2N) of a root: k for positive root k, N + k for its
  /// negative. Absent if the vector is not a root.
  std::optional<int> root_index(const RootVec& v) const;
  /// Coordinates of the root with index in [0, 2N).
  RootVec root(int index) const;

  /// <beta, alpha_i^vee> for a vector in simple-root coordinates.
  int pairing_with_coroot(const RootVec& beta, int i) const;
  /// Coordinates of beta^vee on the simple coroots (integers).
  RootVec coroot_coordinates(const RootVec& beta) const;

  const std::vector<std::vector<int>>& components() const { return components_; }
  int component_of(int node) const { return component_of_[node]; }

  /// Normalized form on h in simple-coroot coordinates: coroots of long
  /// roots have squared length 2 in every simple component.
  const linalg::Mat<Rational>& coroot_gram() const { return coroot_gram_; }
  /// The same form expressed on label coordinates.
  const linalg::Mat<Rational>& label_gram() const { return label_gram_; }
  /// label_gram scaled by label_gram_denominator() to integers.
  const std::vector<std::vector<std::int64_t>>& label_gram_int() const { return label_gram_int_; }
  std::int64_t label_gram_denominator() const { return label_gram_den_; }
  const linalg::Mat<Rational>& cartan_inverse() const { return cartan_inverse_; }

  /// Normalized form of two elements of h given by labels.
  Rational gram(const CartanElement& a, const CartanElement& b) const;
  /// label coordinates -> simple coroot coordinates.
  std::vector<Rational> labels_to_coroot(const std::vector<Rational>& labels) const;
  std::vector<Rational> coroot_to_labels(const std::vector<Rational>& coords) const;

 private:
  CartanMatrix cartan_;
  std::vector<RootVec> positive_;
  std::vector<int> heights_;
  std::vector<Rational> norms_;
  linalg::Mat<Rational> form_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_;
  linalg::Mat<Rational> coroot_gram_;
  linalg::Mat<Rational> label_gram_;
  std::vector<std::vector<std::int64_t>> label_gram_int_;
  std::int64_t label_gram_den_ = 1;
  linalg::Mat<Rational> cartan_inverse_;
  std::vector<std::pair<RootVec, int>> index_;  // sorted for lookup
};

RootSystem build_root_system(const CartanMatrix& cartan);

/// Simple reflection s_i applied in place.
template <class T>
void reflect_in_place(const RootSystem& rs, int i, std::vector<T>& v, Action action = Action::coweight) {
  const T vi = v[i];
  if (vi == 0) return;
  const int l = rs.rank();
  if (action == Action::coweight) {
    for (int j = 0; j < l; ++j) {
      const int c = rs.cartan(j, i);
      if (c != 0) v[j] -= vi * c;
    }
  } else {
    for (int j = 0; j < l; ++j) {
      const int c = rs.cartan(i, j);
      if (c != 0) v[j] -= vi * c;
    }
  }
}

CartanElement reflect(const RootSystem& rs, int i, const CartanElement& h);

template <class T>
void apply_in_place(const RootSystem& rs, const WeylWord& w, std::vector<T>& v, Action action = Action::coweight) {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) reflect_in_place(rs, *it, v, action);
}

CartanElement apply(const RootSystem& rs, const WeylWord& w, const CartanElement& h);

/// Moves v into the chamber { v_i >= 0 : i in allowed } using reflections
/// from `allowed` only, always picking the smallest index with a negative
/// entry. Returns w with w(v_in) == v_out.
template <class T>
WeylWord descend_in_place(const RootSystem& rs, std::vector<T>& v, const std::vector<int>& allowed,
                          Action action = Action::coweight) {
  std::vector<int> steps;
  for (;;) {
    int pick = -1;
    for (int i : allowed) {
      if (v[i] < 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) break;
    reflect_in_place(rs, pick, v, action);
    steps.push_back(pick);
  }
  return WeylWord{{steps.rbegin(), steps.rend()}};
}

std::vector<int> all_nodes(int rank);

struct DominantResult {
  CartanElement dominant;
  WeylWord witness;
};

DominantResult to_dominant(const RootSystem& rs, const CartanElement& h);

/// Visits every element of the W-orbit of a dominant vector exactly once.
///
/// Each non-dominant element's parent is s_i of it for the smallest i with
/// a negative entry; the traversal walks this tree depth-first keeping only
/// the current path, so memory is O(depth * rank). The visitor may return
/// void or bool (false stops the traversal).
template <class T, class Visitor>
std::size_t orbit_iterate_raw(const RootSystem& rs, const std::vector<T>& dominant, Visitor&& visit,
                              Action action = Action::coweight, OrbitStats* stats = nullptr) {
  const int l = rs.rank();
  for (int i = 0; i < l; ++i) {
    if (dominant[i] < 0) throw NotDominant("orbit_iterate needs a dominant start");
  }
  struct Frame {
    std::vector<T> v;
    int next;
  };
  std::vector<Frame> stack;
  stack.push_back({dominant, 0});
  std::size_t count = 0;
  std::size_t max_depth = 1;
  auto call = [&](const std::vector<T>& v) {
    ++count;
    if constexpr (std::is_same_v<decltype(visit(v)), bool>) {
      return visit(v);
    } else {
      visit(v);
      return true;
    }
  };
  if (!call(dominant)) {
    if (stats) *stats = {count, max_depth, max_depth * static_cast<std::size_t>(l + 1)};
    return count;
  }
  auto coupling = [&](int k, int j) { return action == Action::coweight ? rs.cartan(k, j) : rs.cartan(j, k); };
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next >= l) {
      stack.pop_back();
      continue;
    }
    const int j = top.next++;
    const T vj = top.v[j];
    if (!(vj > 0)) continue;
    // s_j(v) must have j as its smallest negative index.
    bool ok = true;
    for (int k = 0; k < j; ++k) {
      const int c = coupling(k, j);
      T nk = top.v[k];
      if (c != 0) nk -= vj * c;
      if (nk < 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<T> child = top.v;
    reflect_in_place(rs, j, child, action);
    if (!call(child)) break;
    stack.push_back({std::move(child), 0});
    max_depth = std::max(max_depth, stack.size());
  }
  if (stats) *stats = {count, max_depth, max_depth * static_cast<std::size_t>(l + 1)};
  return count;
}

/// Orbit of a dominant CartanElement; throws NotDominant otherwise.
std::size_t orbit_iterate(const RootSystem& rs, const CartanElement& dominant_h,
                          const std::function<void(const CartanElement&)>& visitor,
                          OrbitStats* stats = nullptr);

/// |W|, counted as the orbit of a regular dominant element.
std::uint64_t weyl_order(const RootSystem& rs);

/// |W| from the product formula over simple factors.
std::uint64_t weyl_order_from_type(const RootSystem& rs);

/// Orbit size of a dominant integral vector, |W| / |Stab|.
std::uint64_t orbit_size(const RootSystem& rs, const std::vector<std::int64_t>& dominant,
                         Action action = Action::coweight);

}  // namespace liesub
