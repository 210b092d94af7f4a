#pragma once

// Semisimple Lie algebras in a Chevalley basis over a number field.
//
// Basis order: x_a for the positive roots (in RootSystem order), then y_a in
// the same order, then h_1..h_l (simple coroots). Structure constants are
// integers. Sign convention: N(alpha_i, xi - alpha_i) = +(p+1) for every
// extraspecial pair, alpha_i being the simple root of smallest index with
// xi - alpha_i a root.

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "liesub/field.hpp"
#include "liesub/rootsystem.hpp"

namespace liesub {

using GVector = std::vector<FieldElement>;

/// One structure constant entry: [b_i, b_j] contains coeff * b_k.
struct StructTerm {
  int index;
  std::int64_t coeff;
};

/// Canonical generators (h_i, x_i, y_i), 1 <= i <= r, for a Cartan matrix.
struct CanonicalGenSet {
  std::vector<GVector> h;
  std::vector<GVector> x;
  std::vector<GVector> y;
  CartanMatrix cartan;

  int size() const { return static_cast<int>(h.size()); }
};

struct SL2Triple {
  GVector h;
  GVector e;
  GVector f;
};

class LieAlgebra {
 public:
  LieAlgebra(RootSystem rs, Field field);

  const RootSystem& root_system() const { return rs_; }
  Field field() const { return field_; }
  int dimension() const { return dim_; }
  int rank() const { return rs_.rank(); }
  int num_positive() const { return npos_; }

  int x_index(int positive_root) const { return positive_root; }
  int y_index(int positive_root) const { return npos_ + positive_root; }
  int h_index(int i) const { return 2 * npos_ + i; }
  /// Basis index of the root vector for a root index in [0, 2N).
  int root_vector_index(int root_index) const { return root_index; }
  /// Root index in [0, 2N) of a basis element, or -1 for Cartan elements.
  int root_of_basis(int basis_index) const { return basis_index < 2 * npos_ ? basis_index : -1; }

  /// Value of the root of basis element b on h_i (0 for Cartan elements).
  int weight_on_coroot(int basis_index, int i) const { return weights_[basis_index][i]; }
  /// Root of basis element b in simple-root coordinates (zero for h_i).
  const RootVec& basis_weight(int basis_index) const { return basis_roots_[basis_index]; }

  /// Sparse [b_i, b_j].
  const std::vector<StructTerm>& structure(int i, int j) const { return table_[i * dim_ + j]; }

  /// N(alpha, beta) for roots given by index in [0, 2N), 0 if alpha+beta is not a root.
  std::int64_t structure_constant(int a, int b) const;

  GVector zero() const;
  GVector basis_vector(int i) const;
  GVector bracket(const GVector& u, const GVector& v) const;
  /// Integer Killing form on basis elements.
  std::int64_t killing_basis(int i, int j) const { return killing_[i][j]; }

  /// h with the given labels, written on the simple coroots.
  GVector cartan_vector(const CartanElement& h) const;
  /// Inverse of cartan_vector; throws NotInCartan if u has root components
  /// or irrational coordinates.
  CartanElement cartan_element(const GVector& u) const;

  /// Matrix of ad u (rows indexed by output coordinate).
  linalg::Mat<FieldElement> ad_matrix(const GVector& u) const;

 private:
  RootSystem rs_;
  Field field_;
  int dim_;
  int npos_;
  std::vector<std::vector<int>> weights_;
  std::vector<RootVec> basis_roots_;
  std::vector<std::vector<StructTerm>> table_;
  std::vector<std::vector<std::int64_t>> killing_;
  std::vector<std::vector<std::int64_t>> n_;  // N on root indices, 2N x 2N
};

std::shared_ptr<const LieAlgebra> build_algebra(const RootSystem& rs, Field field);

FieldElement killing_form(const LieAlgebra& L, const GVector& u, const GVector& v);

/// Basis of the joint eigenspace { u : [t_k, u] = values_k u }.
/// Throws NotToral if the t_k do not commute pairwise.
std::vector<GVector> weight_space(const LieAlgebra& L, const std::vector<GVector>& toral,
                                  const std::vector<FieldElement>& values);

/// Basis of { u : [s, u] = 0 for all s in S }.
std::vector<GVector> centralizer(const LieAlgebra& L, const std::vector<GVector>& S);

/// Normalized form value of two Cartan elements given as vectors (rational).
Rational cartan_gram(const LieAlgebra& L, const GVector& a, const GVector& b);

/// Dynkin index of every simple factor of the subalgebra, in the order of
/// diagram_components(sub.cartan). Throws DegenerateRestriction when the
/// normalized form vanishes on a factor.
std::vector<Rational> dynkin_index(const LieAlgebra& L, const CanonicalGenSet& sub);

/// Checks every canonical relation exactly and that the generated
/// subalgebra has the dimension of the type of `cartan`.
bool verify_canonical(const LieAlgebra& L, const CanonicalGenSet& gens, const CartanMatrix& cartan);

/// Like verify_canonical, returning a description of the first failure
/// (empty when everything holds).
std::string explain_canonical(const LieAlgebra& L, const CanonicalGenSet& gens, const CartanMatrix& cartan);

/// Basis of the subalgebra generated by a set of vectors (echelon rows).
/// Stops early and returns what it has once `cap` dimensions are exceeded.
std::vector<GVector> generated_subalgebra(const LieAlgebra& L, const std::vector<GVector>& gens,
                                          std::size_t cap = SIZE_MAX);

/// The standard generators h_i, x_{alpha_i}, y_{alpha_i} of L.
CanonicalGenSet standard_generators(const LieAlgebra& L);

bool is_zero_vector(const GVector& u);
GVector scaled(const GVector& u, const FieldElement& c);
GVector add(const GVector& u, const GVector& v);
GVector sub(const GVector& u, const GVector& v);

}  // namespace liesub
