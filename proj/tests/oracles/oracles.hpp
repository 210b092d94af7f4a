#pragma once

// Brute-force reference implementations used only by the tests. They avoid
// the library's algorithms: orbits are closed naively in coroot
// coordinates, the Weyl group is enumerated as explicit matrices, and so on.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "liesub/polysolve.hpp"
#include "liesub/rational.hpp"
#include "liesub/rootsystem.hpp"

namespace oracle {

using liesub::CartanMatrix;
using liesub::Rational;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

/// Orbit of h (label coordinates) by closure under all simple reflections,
/// computed in coroot coordinates.
std::set<QVec> naive_orbit(const CartanMatrix& c, const QVec& labels);

/// Every Weyl group element as a matrix acting on label coordinates.
std::vector<QMat> weyl_group(const CartanMatrix& c);

QVec apply(const QMat& m, const QVec& v);

/// Positive roots by closure of the simple roots under reflections
/// (in simple-root coordinates).
std::set<std::vector<int>> naive_positive_roots(const CartanMatrix& c);

/// Brute force: is there w in W and a permutation p with w(a[p[i]]) = b[i]?
bool brute_conjugate_sets(const std::vector<QMat>& group, const std::vector<QVec>& a, const std::vector<QVec>& b);

/// Brute force ordered conjugacy.
bool brute_conjugate_ordered(const std::vector<QMat>& group, const std::vector<QVec>& a,
                             const std::vector<QVec>& b);

/// Smallest sorted image of a set of label vectors over the whole group.
std::vector<QVec> set_orbit_key(const std::vector<QMat>& group, const std::vector<QVec>& set);

/// Keys (as in set_orbit_key) of the coroot sets of all pi-systems: sets of
/// linearly independent roots with no difference a root. These are the
/// h-parts of the regular semisimple subalgebras.
std::set<std::vector<QVec>> regular_subalgebra_keys(const CartanMatrix& c);

/// Weighted Dynkin diagrams of the nonzero nilpotent orbits of a classical
/// algebra (letter A, B or C, Bourbaki numbering) from Jordan types: the
/// eigenvalues of h on the natural module are read off the partition.
std::set<std::vector<int>> partition_characteristics(char letter, int n);

/// Number of nonzero nilpotent orbits, from partition counts (A-D) or the
/// known totals for the exceptional types.
int nilpotent_orbit_count(char letter, int n);

/// Classes of semisimple subalgebras of sl(n), n <= 8, per type, counted as
/// faithful n-dimensional modules up to automorphisms of the subalgebra.
/// Keys are the simple components joined by '+' in sorted order; the
/// ambient itself is included.
std::map<std::string, int> sl_module_class_counts(int n);

/// A deterministic corpus of small polynomial systems over Q.
struct PolySystem {
  std::vector<liesub::MultiPoly> gens;
  /// Known common zeros (possibly empty when the system is infeasible).
  std::vector<std::vector<Rational>> points;
  bool infeasible = false;
};

/// `count` systems in 2 or 3 variables: zero-dimensional ones built from
/// prescribed rational points, mixed by random polynomial multipliers.
std::vector<PolySystem> groebner_corpus(int count, unsigned seed);

/// `count` systems whose ideal contains 1 by construction.
std::vector<PolySystem> infeasible_corpus(int count, unsigned seed);

}  // namespace oracle
