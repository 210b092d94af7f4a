#pragma once

// Classification of semisimple subalgebras up to linear equivalence:
// rank-by-rank construction for simple ambients, the direct-sum combiner
// for semisimple ones, inclusion witnesses and chain realization.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "liesub/candidates.hpp"
#include "liesub/chevalley.hpp"
#include "liesub/subconstruct.hpp"
#include "liesub/weylequiv.hpp"

namespace liesub {

inline constexpr int kDatabaseVersion = 1;

struct ClassFlags {
  bool regular = false;
  bool maximal = false;
};

struct SubalgebraClass {
  int id = 0;
  LieType type;
  CartanMatrix cartan;
  std::vector<CartanElement> h_part;
  CanonicalGenSet gens;
  /// One per simple factor, in the order of diagram_components(cartan).
  std::vector<Rational> dynkin_indices;
  ClassFlags flags;
};

/// A candidate whose construction needs a field extension.
struct PendingOperator {
  CartanMatrix cartan;
  std::vector<CartanElement> h_part;
  std::string artifact;
};

struct Database {
  LieType ambient;
  Field field = FieldSpec::rationals();
  std::vector<SubalgebraClass> classes;
  /// (sub id, super id) for every witnessed proper inclusion.
  std::vector<std::pair<int, int>> inclusions;
  std::vector<PendingOperator> pending;

  bool complete() const { return pending.empty(); }
  /// Throws UnknownId.
  const SubalgebraClass& by_id(int id) const;
  /// Id of the class equal to the whole ambient algebra.
  int ambient_id() const;
};

struct ClassifyOptions {
  std::uint64_t seed = kDefaultSeed;
  int trials = kDefaultTrials;
  std::size_t pair_budget = kDefaultPairBudget;
  std::size_t node_cap = kDefaultNodeCap;
  int specializations = 8;
  /// Worker threads for candidate construction; output does not depend on it.
  int jobs = 1;
  /// Directory for per-type sub-databases; empty disables the disk cache.
  std::string cache_dir;
  /// Checkpoint file for the top-level simple classification.
  std::string checkpoint;
  bool resume = false;
  /// Progress lines; defaults to no logging.
  std::function<void(const std::string&)> log;
};

/// Linear map of L_src into L_dst determined by images of the standard
/// generators of L_src (which must satisfy the Chevalley relations).
class Embedding {
 public:
  Embedding(const LieAlgebra& src, const LieAlgebra& dst, const CanonicalGenSet& images);

  GVector map(const GVector& u) const;
  CanonicalGenSet map(const CanonicalGenSet& g) const;

 private:
  const LieAlgebra* dst_;
  std::vector<GVector> images_;
};

/// Whether an h-part is the set of simple coroots of a pi-system: every
/// entry is a coroot beta^vee and no difference of the betas is a root.
bool is_regular_hpart(const RootSystem& rs, const std::vector<CartanElement>& h_part);

/// Canonical string of the W-orbit of the set of h-part entries.
std::string equivalence_key(const RootSystem& rs, const std::vector<CartanElement>& h_part,
                            std::size_t node_cap = kDefaultNodeCap);

/// Semisimple types of the given rank, sorted.
std::vector<LieType> semisimple_types(int rank);

/// Shared algebras and sub-databases for one field and option set.
class Classifier {
 public:
  explicit Classifier(Field field = FieldSpec::rationals(), ClassifyOptions options = {});

  Field field() const { return field_; }
  const ClassifyOptions& options() const { return options_; }

  /// Algebra with Cartan matrix type.cartan_matrix().
  std::shared_ptr<const LieAlgebra> algebra(const LieType& type);

  /// Classes of any semisimple type without inclusion data; memoized in
  /// memory and in options.cache_dir.
  const Database& classes_of(const LieType& type);

  /// Classes plus inclusion edges and maximality flags.
  Database classify(const LieType& type);

  /// Simple ambient classification, honoring the checkpoint options.
  Database classify_simple_classes(SimpleType type);

  void log(const std::string& line) const;

 private:
  Field field_;
  ClassifyOptions options_;
  /// Type whose simple classification uses the checkpoint.
  std::optional<LieType> top_type_;
  std::map<LieType, std::shared_ptr<const LieAlgebra>> algebras_;
  std::map<LieType, Database> databases_;
};

/// Complete database (with inclusions) of a simple type.
Database classify_simple(SimpleType type, Field field = FieldSpec::rationals(), const ClassifyOptions& options = {});

/// Classes of g1 + g2 from complete databases of g1 and g2, without
/// inclusion data. The ambient type is the sorted union of the factors.
Database combine_semisimple(const Database& db1, const Database& db2, Classifier& ctx);

/// Fills inclusions and maximal flags.
void compute_inclusions(Database& db, Classifier& ctx);

/// A subalgebra inside class super_id linearly equivalent to class sub_id.
std::optional<CanonicalGenSet> includes(const Database& db, int sub_id, int super_id, Classifier& ctx);

/// Nested realizations of a chain of ids (smallest first); the last entry
/// keeps its stored generators. Throws NotAChain.
std::vector<CanonicalGenSet> realize_chain(const Database& db, const std::vector<int>& chain, Classifier& ctx);

/// Empty when every stored invariant re-verifies, else a message naming
/// the first failing class.
std::string verify_database(const Database& db, Classifier& ctx);

nlohmann::json to_json(const Database& db);
/// Throws FormatError.
Database database_from_json(const nlohmann::json& j);

}  // namespace liesub
