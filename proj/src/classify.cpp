#include "liesub/classify.hpp"

#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace liesub {

using nlohmann::json;

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

CartanMatrix submatrix(const CartanMatrix& c, const std::vector<int>& nodes) {
  CartanMatrix out(nodes.size(), std::vector<int>(nodes.size()));
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = 0; b < nodes.size(); ++b) out[a][b] = c[nodes[a]][nodes[b]];
  }
  return out;
}

CartanMatrix block(const std::vector<CartanMatrix>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  CartanMatrix out(n, std::vector<int>(n, 0));
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = 0; b < p.size(); ++b) out[off + a][off + b] = p[a][b];
    }
    off += p.size();
  }
  return out;
}

std::string labels_string(const CartanElement& h) {
  std::string out;
  for (const auto& x : h.labels) out += to_string(x) + ",";
  return out;
}

std::string class_key(const LieType& type, const std::string& eq) { return type.to_string() + "|" + eq; }

/// Images of the standard generators of the algebra of `type` under the
/// isomorphism onto the subalgebra with canonical generators `gens`.
CanonicalGenSet generator_images(const LieType& type, const CanonicalGenSet& gens) {
  const CartanMatrix tc = type.cartan_matrix();
  const auto isos = cartan_isomorphisms(gens.cartan, tc, 1);
  if (isos.empty()) throw Error("generator set does not have the Cartan matrix of " + type.to_string());
  const auto& p = isos.front();
  CanonicalGenSet out;
  out.cartan = tc;
  for (std::size_t i = 0; i < tc.size(); ++i) {
    out.h.push_back(gens.h[p[i]]);
    out.x.push_back(gens.x[p[i]]);
    out.y.push_back(gens.y[p[i]]);
  }
  return out;
}

/// Each class of the abstract algebra of `type`, carried into L through the
/// subalgebra with canonical generators `realization`.
std::vector<std::pair<std::string, CanonicalGenSet>> carried_classes(const LieAlgebra& L, const LieType& type,
                                                                     const CanonicalGenSet& realization,
                                                                     Classifier& ctx) {
  const auto abstract = ctx.algebra(type);
  const Embedding e(*abstract, L, generator_images(type, realization));
  std::vector<std::pair<std::string, CanonicalGenSet>> out;
  for (const auto& c : ctx.classes_of(type).classes) {
    CanonicalGenSet g = e.map(c.gens);
    std::vector<CartanElement> hs;
    for (const auto& h : g.h) hs.push_back(L.cartan_element(h));
    out.emplace_back(class_key(c.type, equivalence_key(L.root_system(), hs, ctx.options().node_cap)), std::move(g));
  }
  return out;
}

void finalize(Database& db, const LieAlgebra& L, std::size_t node_cap) {
  const RootSystem& rs = L.root_system();
  std::vector<std::pair<std::string, SubalgebraClass>> keyed;
  for (auto& c : db.classes) {
    c.dynkin_indices = dynkin_index(L, c.gens);
    c.flags.regular = is_regular_hpart(rs, c.h_part);
    keyed.emplace_back(equivalence_key(rs, c.h_part, node_cap), std::move(c));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const auto& x = a.second;
    const auto& y = b.second;
    if (x.type.rank() != y.type.rank()) return x.type.rank() < y.type.rank();
    if (x.type != y.type) return x.type < y.type;
    if (x.dynkin_indices != y.dynkin_indices) return x.dynkin_indices < y.dynkin_indices;
    return a.first < b.first;
  });
  db.classes.clear();
  int id = 1;
  for (auto& [k, c] : keyed) {
    c.id = id++;
    db.classes.push_back(std::move(c));
  }
}

// JSON helpers.

json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from(const json& j) {
  if (!j.is_string()) throw FormatError("expected a rational string");
  return parse_rational(j.get<std::string>());
}

json vector_json(const GVector& v) {
  json out = json::array();
  for (const auto& x : v) {
    json c = json::array();
    for (const auto& q : x.coords()) c.push_back(rational_json(q));
    out.push_back(c);
  }
  return out;
}

GVector vector_from(const json& j, Field f) {
  if (!j.is_array()) throw FormatError("expected a vector");
  GVector out;
  for (const auto& x : j) {
    if (!x.is_array() || x.empty()) throw FormatError("expected a field element");
    std::vector<Rational> coords;
    for (const auto& q : x) coords.push_back(rational_from(q));
    if (coords.size() == 1) {
      out.emplace_back(f, coords.front());
    } else {
      if (static_cast<int>(coords.size()) != f->degree()) throw FormatError("field element has wrong degree");
      out.emplace_back(f, coords);
    }
  }
  return out;
}

json hpart_json(const std::vector<CartanElement>& hs) {
  json out = json::array();
  for (const auto& h : hs) {
    json row = json::array();
    for (const auto& x : h.labels) row.push_back(rational_json(x));
    out.push_back(row);
  }
  return out;
}

std::vector<CartanElement> hpart_from(const json& j) {
  std::vector<CartanElement> out;
  for (const auto& row : j) {
    CartanElement h;
    for (const auto& x : row) h.labels.push_back(rational_from(x));
    out.push_back(h);
  }
  return out;
}

json class_json(const SubalgebraClass& c) {
  json gens;
  for (const char* part : {"h", "x", "y"}) {
    const auto& vs = part[0] == 'h' ? c.gens.h : part[0] == 'x' ? c.gens.x : c.gens.y;
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(vector_json(v));
    gens[part] = arr;
  }
  json indices = json::array();
  for (const auto& q : c.dynkin_indices) indices.push_back(rational_json(q));
  return json{{"id", c.id},
              {"type", c.type.to_string()},
              {"cartan", c.cartan},
              {"hpart", hpart_json(c.h_part)},
              {"gens", gens},
              {"indices", indices},
              {"flags", {{"regular", c.flags.regular}, {"maximal", c.flags.maximal}}}};
}

SubalgebraClass class_from(const json& j, Field f) {
  SubalgebraClass c;
  c.id = j.at("id").get<int>();
  c.type = parse_type(j.at("type").get<std::string>());
  c.cartan = j.at("cartan").get<CartanMatrix>();
  c.h_part = hpart_from(j.at("hpart"));
  c.gens.cartan = c.cartan;
  for (const auto& v : j.at("gens").at("h")) c.gens.h.push_back(vector_from(v, f));
  for (const auto& v : j.at("gens").at("x")) c.gens.x.push_back(vector_from(v, f));
  for (const auto& v : j.at("gens").at("y")) c.gens.y.push_back(vector_from(v, f));
  for (const auto& q : j.at("indices")) c.dynkin_indices.push_back(rational_from(q));
  c.flags.regular = j.at("flags").at("regular").get<bool>();
  c.flags.maximal = j.at("flags").at("maximal").get<bool>();
  return c;
}

json field_json(Field f) {
  json m = json::array();
  for (const auto& q : f->minimal_polynomial()) m.push_back(rational_json(q));
  return json{{"minpoly", m}};
}

Field field_from(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& q : j.at("minpoly")) coeffs.push_back(rational_from(q));
  return FieldSpec::intern(coeffs);
}

std::string field_tag(Field f) {
  if (f->is_rationals()) return "Q";
  std::string out;
  for (const auto& q : f->minimal_polynomial()) {
    std::string s = to_string(q);
    std::replace(s.begin(), s.end(), '/', 'd');
    out += s + "_";
  }
  return out;
}

/// Runs fn(i) for i in [0, n) on up to `jobs` threads; exceptions are
/// rethrown in index order.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(n);
  auto guarded = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) guarded(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) guarded(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

bool contained_in(const LieAlgebra& L, const std::vector<GVector>& small, const std::vector<GVector>& big) {
  const auto a = generated_subalgebra(L, small);
  const auto b = generated_subalgebra(L, big);
  linalg::Mat<FieldElement> both = b;
  both.insert(both.end(), a.begin(), a.end());
  return linalg::rank(both, L.dimension()) == b.size();
}

std::vector<GVector> all_gens(const CanonicalGenSet& g) {
  std::vector<GVector> out = g.h;
  out.insert(out.end(), g.x.begin(), g.x.end());
  out.insert(out.end(), g.y.begin(), g.y.end());
  return out;
}

void simple_type_list(int remaining, SimpleType min, std::vector<SimpleType>& cur, std::vector<LieType>& out) {
  if (remaining == 0) {
    out.push_back(LieType{cur});
    return;
  }
  const std::vector<std::pair<char, int>> families{{'A', 1}, {'B', 2}, {'C', 3}, {'D', 4}, {'E', 6}, {'F', 4}, {'G', 2}};
  std::vector<SimpleType> options;
  for (const auto& [letter, lo] : families) {
    for (int n = lo; n <= remaining; ++n) {
      if (letter == 'E' && n > 8) break;
      if (letter == 'F' && n != 4) continue;
      if (letter == 'G' && n != 2) continue;
      options.push_back({letter, n});
    }
  }
  std::sort(options.begin(), options.end());
  for (const auto& t : options) {
    if (t < min) continue;
    cur.push_back(t);
    simple_type_list(remaining - t.rank, t, cur, out);
    cur.pop_back();
  }
}

}  // namespace

// Database

const SubalgebraClass& Database::by_id(int id) const {
  for (const auto& c : classes) {
    if (c.id == id) return c;
  }
  throw UnknownId("no class with id " + std::to_string(id));
}

int Database::ambient_id() const {
  // A subalgebra of the ambient type has full dimension.
  for (const auto& c : classes) {
    if (c.type == ambient) return c.id;
  }
  return -1;
}

// Embedding

Embedding::Embedding(const LieAlgebra& src, const LieAlgebra& dst, const CanonicalGenSet& images) : dst_(&dst) {
  const RootSystem& rs = src.root_system();
  const int l = rs.rank();
  const int npos = src.num_positive();
  images_.assign(src.dimension(), dst.zero());
  std::vector<int> simple_index(l);
  for (int i = 0; i < l; ++i) {
    RootVec e(l, 0);
    e[i] = 1;
    simple_index[i] = *rs.root_index(e);
    images_[src.x_index(simple_index[i])] = images.x[i];
    images_[src.y_index(simple_index[i])] = images.y[i];
    images_[src.h_index(i)] = images.h[i];
  }
  auto coefficient = [&](int a, int b, int target) {
    for (const auto& t : src.structure(a, b)) {
      if (t.index == target) return t.coeff;
    }
    return std::int64_t{0};
  };
  for (int k = 0; k < npos; ++k) {
    const RootVec& beta = rs.positive_roots()[k];
    int height = 0;
    for (int v : beta) height += v;
    if (height == 1) continue;
    for (int i = 0; i < l; ++i) {
      RootVec rest = beta;
      --rest[i];
      const auto j = rs.root_index(rest);
      if (!j || *j >= npos) continue;
      const int si = simple_index[i];
      const std::int64_t cx = coefficient(src.x_index(si), src.x_index(*j), src.x_index(k));
      const std::int64_t cy = coefficient(src.y_index(si), src.y_index(*j), src.y_index(k));
      const FieldElement one(dst.field(), Rational(1));
      images_[src.x_index(k)] =
          scaled(dst.bracket(images_[src.x_index(si)], images_[src.x_index(*j)]), one * frac(1, cx));
      images_[src.y_index(k)] =
          scaled(dst.bracket(images_[src.y_index(si)], images_[src.y_index(*j)]), one * frac(1, cy));
      break;
    }
  }
}

GVector Embedding::map(const GVector& u) const {
  GVector out = dst_->zero();
  for (std::size_t b = 0; b < u.size(); ++b) {
    if (u[b].is_zero()) continue;
    const auto& img = images_[b];
    for (std::size_t k = 0; k < img.size(); ++k) {
      if (!img[k].is_zero()) out[k] += u[b] * img[k];
    }
  }
  return out;
}

CanonicalGenSet Embedding::map(const CanonicalGenSet& g) const {
  CanonicalGenSet out;
  out.cartan = g.cartan;
  for (const auto& v : g.h) out.h.push_back(map(v));
  for (const auto& v : g.x) out.x.push_back(map(v));
  for (const auto& v : g.y) out.y.push_back(map(v));
  return out;
}

// Free helpers

bool is_regular_hpart(const RootSystem& rs, const std::vector<CartanElement>& h_part) {
  const int l = rs.rank();
  std::vector<RootVec> betas;
  for (const auto& h : h_part) {
    std::optional<RootVec> found;
    for (int idx = 0; idx < 2 * rs.num_positive() && !found; ++idx) {
      const RootVec beta = rs.root(idx);
      const Rational bb = rs.inner(beta, beta);
      bool match = true;
      for (int j = 0; j < l && match; ++j) {
        RootVec e(l, 0);
        e[j] = 1;
        match = 2 * rs.inner(e, beta) / bb == h.labels[j];
      }
      if (match) found = beta;
    }
    if (!found) return false;
    betas.push_back(*found);
  }
  for (std::size_t a = 0; a < betas.size(); ++a) {
    for (std::size_t b = 0; b < betas.size(); ++b) {
      if (a == b) continue;
      RootVec d(l);
      for (int i = 0; i < l; ++i) d[i] = betas[a][i] - betas[b][i];
      if (rs.root_index(d) || std::all_of(d.begin(), d.end(), [](int v) { return v == 0; })) return false;
    }
  }
  return true;
}

std::string equivalence_key(const RootSystem& rs, const std::vector<CartanElement>& h_part, std::size_t node_cap) {
  std::string out;
  for (const auto& h : set_key(rs, make_htuple(rs, h_part), node_cap).elements) out += labels_string(h) + ";";
  return out;
}

std::vector<LieType> semisimple_types(int rank) {
  std::vector<LieType> out;
  std::vector<SimpleType> cur;
  simple_type_list(rank, SimpleType{'A', 0}, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Classifier

Classifier::Classifier(Field field, ClassifyOptions options) : field_(field), options_(std::move(options)) {}

void Classifier::log(const std::string& line) const {
  if (options_.log) options_.log(line);
}

std::shared_ptr<const LieAlgebra> Classifier::algebra(const LieType& type) {
  auto& slot = algebras_[type];
  if (!slot) slot = build_algebra(RootSystem(type.cartan_matrix()), field_);
  return slot;
}

const Database& Classifier::classes_of(const LieType& type) {
  auto it = databases_.find(type);
  if (it != databases_.end()) return it->second;
  std::filesystem::path cache;
  if (!options_.cache_dir.empty()) {
    cache = std::filesystem::path(options_.cache_dir) / (type.to_string() + "_" + field_tag(field_) + ".json");
    if (std::filesystem::exists(cache)) {
      std::ifstream in(cache);
      Database db = database_from_json(json::parse(in));
      log("cache hit " + cache.string());
      return databases_.emplace(type, std::move(db)).first->second;
    }
  }
  Database db;
  if (type.components.size() == 1) {
    db = classify_simple_classes(type.components.front());
  } else {
    LieType acc{{type.components.front()}};
    db = classes_of(acc);
    for (std::size_t k = 1; k < type.components.size(); ++k) {
      db = combine_semisimple(db, classes_of(LieType{{type.components[k]}}), *this);
    }
  }
  if (!cache.empty() && db.complete()) {
    std::filesystem::create_directories(cache.parent_path());
    std::ofstream out(cache);
    out << to_json(db).dump() << "\n";
  }
  return databases_.emplace(type, std::move(db)).first->second;
}

Database Classifier::classify(const LieType& type) {
  top_type_ = type;
  Database db = classes_of(type);
  if (db.complete()) compute_inclusions(db, *this);
  return db;
}

Database Classifier::classify_simple_classes(SimpleType type) {
  const LieType ambient{{type}};
  const auto L = algebra(ambient);
  const RootSystem& rs = L->root_system();
  std::vector<CartanElement> chars;
  for (const auto& c : characteristics(*L)) chars.push_back(c.labels);
  const WeightMap module = smallest_module(rs.cartan());
  log("ambient=" + ambient.to_string() + " characteristics=" + std::to_string(chars.size()));

  std::map<LieType, std::vector<SubalgebraClass>> found;
  std::set<LieType> completed;
  std::vector<PendingOperator> pending;
  const bool use_checkpoint = !options_.checkpoint.empty() && top_type_ == ambient;

  if (use_checkpoint && options_.resume && std::filesystem::exists(options_.checkpoint)) {
    std::ifstream in(options_.checkpoint);
    const json j = json::parse(in);
    if (j.at("ambient").get<std::string>() != ambient.to_string()) {
      throw FormatError("checkpoint belongs to " + j.at("ambient").get<std::string>());
    }
    for (const auto& t : j.at("completed")) completed.insert(parse_type(t.get<std::string>()));
    for (const auto& c : j.at("classes")) {
      SubalgebraClass k = class_from(c, field_);
      if (completed.count(k.type)) found[k.type].push_back(std::move(k));
    }
    log("resumed " + std::to_string(completed.size()) + " completed types");
  }
  auto save_checkpoint = [&] {
    if (!use_checkpoint) return;
    json j{{"version", kDatabaseVersion}, {"ambient", ambient.to_string()}, {"field", field_json(field_)}};
    j["completed"] = json::array();
    for (const auto& t : completed) j["completed"].push_back(t.to_string());
    j["classes"] = json::array();
    for (const auto& [t, cs] : found) {
      if (!completed.count(t)) continue;
      for (const auto& c : cs) j["classes"].push_back(class_json(c));
    }
    const std::string tmp = options_.checkpoint + ".tmp";
    const auto parent = std::filesystem::path(options_.checkpoint).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    {
      std::ofstream out(tmp);
      out << j.dump() << "\n";
    }
    std::filesystem::rename(tmp, options_.checkpoint);
  };

  std::vector<LieType> order{parse_type("A1")};
  for (int r = 2; r <= rs.rank(); ++r) {
    for (const auto& t : semisimple_types(r)) {
      if (t.dimension() <= L->dimension()) order.push_back(t);
    }
  }
  bool clean = pending.empty();
  for (const auto& t : order) {
    if (completed.count(t)) continue;
    const CartanMatrix target = t.rank() == 1 ? CartanMatrix{{2}} : leaf_last_cartan(t);
    const int r = static_cast<int>(target.size());
    std::vector<std::vector<CartanElement>> h0{{}};
    if (r > 1) {
      CartanMatrix prefix_matrix(r - 1, std::vector<int>(r - 1));
      for (int a = 0; a + 1 < r; ++a) {
        for (int b = 0; b + 1 < r; ++b) prefix_matrix[a][b] = target[a][b];
      }
      const LieType prefix_type = identify(prefix_matrix).first;
      const auto& prefix_classes = found[prefix_type];
      bool isolated = true;
      for (int a = 0; a + 1 < r; ++a) isolated = isolated && target[r - 1][a] == 0;
      h0.clear();
      std::set<std::string> seen;
      for (const auto& c : prefix_classes) {
        const auto isos = cartan_isomorphisms(c.cartan, prefix_matrix, isolated ? 1 : SIZE_MAX);
        for (const auto& p : isos) {
          std::vector<CartanElement> tuple;
          std::string key;
          for (int a = 0; a + 1 < r; ++a) {
            tuple.push_back(c.h_part[p[a]]);
            key += labels_string(tuple.back()) + ";";
          }
          if (seen.insert(key).second) h0.push_back(std::move(tuple));
        }
      }
      if (h0.empty()) {
        if (clean) completed.insert(t);
        continue;
      }
    }
    std::vector<std::vector<CartanElement>> unique;
    std::vector<std::string> keys;
    std::set<std::string> seen;
    CandidateStats stats;
    extend_candidates(rs, target, h0, chars, module, [&](const CandidateTuple& c) {
      std::string key = equivalence_key(rs, c.h_part, options_.node_cap);
      if (seen.insert(key).second) {
        unique.push_back(c.h_part);
        keys.push_back(std::move(key));
      }
    }, &stats);
    std::vector<ConstructOutcome> outcomes(unique.size());
    parallel_for(unique.size(), options_.jobs, [&](std::size_t i) {
      ConstructOptions co;
      co.seed = options_.seed ^ fnv1a(keys[i]);
      co.trials = options_.trials;
      co.pair_budget = options_.pair_budget;
      co.specializations = options_.specializations;
      try {
        outcomes[i] = construct(*L, target, unique[i], co);
      } catch (const DegenerateHPart&) {
        outcomes[i].kind = ConstructOutcome::Kind::not_exist;
      }
    });
    int n_found = 0;
    int n_pending = 0;
    auto& bucket = found[t];
    for (std::size_t i = 0; i < unique.size(); ++i) {
      const auto& out = outcomes[i];
      if (out.kind == ConstructOutcome::Kind::found) {
        SubalgebraClass c;
        c.type = t;
        c.cartan = target;
        c.h_part = unique[i];
        c.gens = out.gens;
        bucket.push_back(std::move(c));
        ++n_found;
      } else if (out.kind == ConstructOutcome::Kind::needs_operator) {
        pending.push_back({target, unique[i], needs_operator_artifact(ambient.to_string(), target, unique[i], out.system)});
        ++n_pending;
      }
    }
    log("type=" + t.to_string() + " " + format_stats(stats) + " unique=" + std::to_string(unique.size()) +
        " found=" + std::to_string(n_found) + " pending=" + std::to_string(n_pending));
    if (n_pending > 0) clean = false;
    if (clean) {
      completed.insert(t);
      save_checkpoint();
    }
  }

  Database db;
  db.ambient = ambient;
  db.field = field_;
  for (auto& [t, cs] : found) {
    for (auto& c : cs) db.classes.push_back(std::move(c));
  }
  db.pending = std::move(pending);
  finalize(db, *L, options_.node_cap);
  return db;
}

// Top-level operations

Database classify_simple(SimpleType type, Field field, const ClassifyOptions& options) {
  Classifier ctx(field, options);
  return ctx.classify(LieType{{type}});
}

Database combine_semisimple(const Database& db1, const Database& db2, Classifier& ctx) {
  std::vector<SimpleType> comps = db1.ambient.components;
  comps.insert(comps.end(), db2.ambient.components.begin(), db2.ambient.components.end());
  std::sort(comps.begin(), comps.end());
  const LieType sum{comps};
  const auto L = ctx.algebra(sum);
  const auto L1 = ctx.algebra(db1.ambient);
  const auto L2 = ctx.algebra(db2.ambient);
  const RootSystem& rs = L->root_system();
  const CartanMatrix c1 = db1.ambient.cartan_matrix();
  const CartanMatrix c2 = db2.ambient.cartan_matrix();
  const auto p = cartan_isomorphisms(rs.cartan(), block({c1, c2}), 1).front();
  auto images = [&](int offset, int n) {
    CanonicalGenSet g;
    for (int i = 0; i < n; ++i) {
      const int node = p[offset + i];
      RootVec e(rs.rank(), 0);
      e[node] = 1;
      const int k = *rs.root_index(e);
      g.h.push_back(L->basis_vector(L->h_index(node)));
      g.x.push_back(L->basis_vector(L->x_index(k)));
      g.y.push_back(L->basis_vector(L->y_index(k)));
    }
    return g;
  };
  const Embedding e1(*L1, *L, images(0, static_cast<int>(c1.size())));
  const Embedding e2(*L2, *L, images(static_cast<int>(c1.size()), static_cast<int>(c2.size())));

  struct Part {
    CanonicalGenSet gens;  // mapped into L
    std::vector<std::vector<int>> comps;
  };
  auto parts_of = [&](const Database& db, const Embedding& e) {
    std::vector<Part> out{Part{}};
    for (const auto& c : db.classes) out.push_back({e.map(c.gens), diagram_components(c.cartan)});
    return out;
  };
  const auto parts1 = parts_of(db1, e1);
  const auto parts2 = parts_of(db2, e2);

  Database db;
  db.ambient = sum;
  db.field = ctx.field();
  std::set<std::string> glued_keys;
  auto add_class = [&](CanonicalGenSet g, bool glued) {
    SubalgebraClass c;
    c.cartan = g.cartan;
    c.type = identify(g.cartan).first;
    for (const auto& h : g.h) c.h_part.push_back(L->cartan_element(h));
    if (glued) {
      const std::string key = class_key(c.type, equivalence_key(rs, c.h_part, ctx.options().node_cap));
      if (!glued_keys.insert(key).second) return;
    }
    c.gens = std::move(g);
    db.classes.push_back(std::move(c));
  };
  auto take = [](const CanonicalGenSet& g, const std::vector<int>& nodes, CanonicalGenSet& out) {
    for (int a : nodes) {
      out.h.push_back(g.h[a]);
      out.x.push_back(g.x[a]);
      out.y.push_back(g.y[a]);
    }
  };
  for (std::size_t a = 0; a < parts1.size(); ++a) {
    for (std::size_t b = 0; b < parts2.size(); ++b) {
      const Part& A = parts1[a];
      const Part& B = parts2[b];
      if (a == 0 && b == 0) continue;
      // Direct sum.
      {
        CanonicalGenSet g;
        std::vector<int> na(A.gens.size()), nb(B.gens.size());
        std::iota(na.begin(), na.end(), 0);
        std::iota(nb.begin(), nb.end(), 0);
        take(A.gens, na, g);
        take(B.gens, nb, g);
        g.cartan = block({A.gens.cartan, B.gens.cartan});
        add_class(std::move(g), false);
      }
      // Diagonal gluings over nonempty component subsets.
      const std::size_t ka = A.comps.size();
      const std::size_t kb = B.comps.size();
      for (std::size_t ma = 1; ma < (std::size_t{1} << ka); ++ma) {
        std::vector<int> glue_a, rest_a;
        for (std::size_t i = 0; i < ka; ++i) {
          auto& dst = (ma >> i) & 1 ? glue_a : rest_a;
          dst.insert(dst.end(), A.comps[i].begin(), A.comps[i].end());
        }
        const CartanMatrix ga = submatrix(A.gens.cartan, glue_a);
        for (std::size_t mb = 1; mb < (std::size_t{1} << kb); ++mb) {
          std::vector<int> glue_b, rest_b;
          for (std::size_t i = 0; i < kb; ++i) {
            auto& dst = (mb >> i) & 1 ? glue_b : rest_b;
            dst.insert(dst.end(), B.comps[i].begin(), B.comps[i].end());
          }
          if (glue_a.size() != glue_b.size()) continue;
          const CartanMatrix gb = submatrix(B.gens.cartan, glue_b);
          for (const auto& pi : cartan_isomorphisms(gb, ga)) {
            CanonicalGenSet g;
            take(A.gens, rest_a, g);
            for (std::size_t i = 0; i < glue_a.size(); ++i) {
              const int u = glue_a[i];
              const int v = glue_b[pi[i]];
              g.h.push_back(add(A.gens.h[u], B.gens.h[v]));
              g.x.push_back(add(A.gens.x[u], B.gens.x[v]));
              g.y.push_back(add(A.gens.y[u], B.gens.y[v]));
            }
            take(B.gens, rest_b, g);
            g.cartan = block({submatrix(A.gens.cartan, rest_a), ga, submatrix(B.gens.cartan, rest_b)});
            add_class(std::move(g), true);
          }
        }
      }
    }
  }
  db.pending = db1.pending;
  db.pending.insert(db.pending.end(), db2.pending.begin(), db2.pending.end());
  finalize(db, *L, ctx.options().node_cap);
  return db;
}

void compute_inclusions(Database& db, Classifier& ctx) {
  const auto L = ctx.algebra(db.ambient);
  const RootSystem& rs = L->root_system();
  const int amb = db.ambient_id();
  std::map<std::string, int> by_key;
  for (const auto& c : db.classes) {
    by_key[class_key(c.type, equivalence_key(rs, c.h_part, ctx.options().node_cap))] = c.id;
  }
  std::set<std::pair<int, int>> edges;
  std::set<std::string> warned;
  for (const auto& s : db.classes) {
    if (s.id != amb && warned.insert(s.type.to_string()).second) {
      const auto& sub = ctx.classes_of(s.type);
      if (!sub.complete()) {
        ctx.log("warning: " + std::to_string(sub.pending.size()) + " subalgebra classes of " + s.type.to_string() +
                " need a larger field; inclusions below classes of that type may be missing");
      }
    }
    if (s.id == amb) {
      for (const auto& c : db.classes) {
        if (c.id != amb) edges.insert({c.id, amb});
      }
      continue;
    }
    for (const auto& [key, gens] : carried_classes(*L, s.type, s.gens, ctx)) {
      const auto it = by_key.find(key);
      if (it == by_key.end()) {
        ctx.log("warning: subalgebra of class " + std::to_string(s.id) + " missing from database");
        continue;
      }
      if (it->second != s.id) edges.insert({it->second, s.id});
    }
  }
  db.inclusions.assign(edges.begin(), edges.end());
  for (auto& c : db.classes) {
    c.flags.maximal = c.id != amb;
    for (const auto& [a, b] : db.inclusions) {
      if (a == c.id && b != amb) c.flags.maximal = false;
    }
  }
}

std::optional<CanonicalGenSet> includes(const Database& db, int sub_id, int super_id, Classifier& ctx) {
  const auto& sub = db.by_id(sub_id);
  const auto& super = db.by_id(super_id);
  if (sub_id == super_id || super_id == db.ambient_id()) return sub.gens;
  if (sub.type.rank() > super.type.rank() || sub.type.dimension() > super.type.dimension()) return std::nullopt;
  const auto L = ctx.algebra(db.ambient);
  const std::string want = class_key(sub.type, equivalence_key(L->root_system(), sub.h_part, ctx.options().node_cap));
  for (auto& [key, gens] : carried_classes(*L, super.type, super.gens, ctx)) {
    if (key == want) return gens;
  }
  return std::nullopt;
}

std::vector<CanonicalGenSet> realize_chain(const Database& db, const std::vector<int>& chain, Classifier& ctx) {
  if (chain.empty()) return {};
  const auto L = ctx.algebra(db.ambient);
  std::vector<CanonicalGenSet> out(chain.size());
  out.back() = db.by_id(chain.back()).gens;
  const int amb = db.ambient_id();
  for (int i = static_cast<int>(chain.size()) - 2; i >= 0; --i) {
    const auto& sub = db.by_id(chain[i]);
    const auto& super = db.by_id(chain[i + 1]);
    if (chain[i] == chain[i + 1]) {
      out[i] = out[i + 1];
      continue;
    }
    if (chain[i + 1] == amb && i + 1 == static_cast<int>(chain.size()) - 1) {
      out[i] = sub.gens;
      continue;
    }
    const std::string want =
        class_key(sub.type, equivalence_key(L->root_system(), sub.h_part, ctx.options().node_cap));
    bool ok = false;
    for (auto& [key, gens] : carried_classes(*L, super.type, out[i + 1], ctx)) {
      if (key == want) {
        out[i] = std::move(gens);
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw NotAChain("class " + std::to_string(chain[i]) + " is not included in class " +
                      std::to_string(chain[i + 1]));
    }
    if (!contained_in(*L, all_gens(out[i]), all_gens(out[i + 1]))) {
      throw Error("realization of class " + std::to_string(chain[i]) + " is not nested");
    }
  }
  return out;
}

std::string verify_database(const Database& db, Classifier& ctx) {
  const auto L = ctx.algebra(db.ambient);
  const RootSystem& rs = L->root_system();
  std::map<std::string, int> seen;
  for (const auto& c : db.classes) {
    const std::string id = "class " + std::to_string(c.id);
    if (identify(c.cartan).first != c.type) return id + ": type does not match the Cartan matrix";
    const std::string why = explain_canonical(*L, c.gens, c.cartan);
    if (!why.empty()) return id + ": " + why;
    if (c.h_part.size() != c.gens.h.size()) return id + ": h-part length mismatch";
    for (std::size_t i = 0; i < c.h_part.size(); ++i) {
      if (L->cartan_element(c.gens.h[i]) != c.h_part[i]) return id + ": h-part differs from generators";
    }
    const std::string key = class_key(c.type, equivalence_key(rs, c.h_part, ctx.options().node_cap));
    const auto [it, fresh] = seen.emplace(key, c.id);
    if (!fresh) return id + ": linearly equivalent to class " + std::to_string(it->second);
  }
  for (const auto& [a, b] : db.inclusions) {
    if (!includes(db, a, b, ctx)) return "class " + std::to_string(a) + ": inclusion in " + std::to_string(b) + " not witnessed";
  }
  return "";
}

json to_json(const Database& db) {
  json j{{"version", kDatabaseVersion}, {"ambient", db.ambient.to_string()}, {"field", field_json(db.field)}};
  j["complete"] = db.complete();
  j["classes"] = json::array();
  for (const auto& c : db.classes) j["classes"].push_back(class_json(c));
  j["inclusions"] = json::array();
  for (const auto& [a, b] : db.inclusions) j["inclusions"].push_back({a, b});
  j["pending"] = json::array();
  for (const auto& p : db.pending) {
    j["pending"].push_back({{"cartan", p.cartan}, {"hpart", hpart_json(p.h_part)}, {"artifact", p.artifact}});
  }
  return j;
}

Database database_from_json(const json& j) {
  try {
    if (j.at("version").get<int>() != kDatabaseVersion) throw FormatError("unsupported database version");
    Database db;
    db.ambient = parse_type(j.at("ambient").get<std::string>());
    db.field = field_from(j.at("field"));
    for (const auto& c : j.at("classes")) db.classes.push_back(class_from(c, db.field));
    for (const auto& e : j.at("inclusions")) db.inclusions.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("pending")) {
      for (const auto& p : j.at("pending")) {
        db.pending.push_back(
            {p.at("cartan").get<CartanMatrix>(), hpart_from(p.at("hpart")), p.at("artifact").get<std::string>()});
      }
    }
    return db;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed database: ") + e.what());
  }
}

}  // namespace liesub
