// Command-line front end: classify, query, verify and export subalgebra
// databases. Logs go to standard error; databases and artifacts to files.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "liesub/classify.hpp"

using namespace liesub;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kNeedsOperator = 2, kBudget = 3, kUnknownId = 4 };

Database load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return database_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw FormatError(std::string("cannot parse ") + path + ": " + e.what());
  }
}

std::string labels_text(const CartanElement& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.labels.size(); ++i) s += (i ? "," : "") + to_string(h.labels[i]);
  return s + ")";
}

std::string hpart_text(const std::vector<CartanElement>& hs) {
  std::string s;
  for (std::size_t i = 0; i < hs.size(); ++i) s += (i ? " " : "") + labels_text(hs[i]);
  return s;
}

std::string indices_text(const Database& db, const SubalgebraClass& c) {
  if (c.id == db.ambient_id()) return "-";
  std::string s;
  for (std::size_t i = 0; i < c.dynkin_indices.size(); ++i) s += (i ? "," : "") + to_string(c.dynkin_indices[i]);
  return s;
}

std::vector<CartanElement> hpart_of(const LieAlgebra& L, const CanonicalGenSet& g) {
  std::vector<CartanElement> out;
  for (const auto& h : g.h) out.push_back(L.cartan_element(h));
  return out;
}

std::string vector_text(const GVector& v) {
  std::string s;
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (v[b].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + v[b].to_string() + ")*b" + std::to_string(b + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semisimple subalgebras of semisimple Lie algebras"};
  app.require_subcommand(1);

  std::string type_text;
  std::string field_text;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
  std::string out_path;
  bool resume = false;
  std::size_t budget_gb = kDefaultPairBudget;
  std::size_t budget_bt = kDefaultNodeCap;
  int trials = kDefaultTrials;
  std::string cache_dir;
  bool quiet = false;
  auto* classify = app.add_subcommand("classify", "Classify subalgebras of a semisimple type");
  classify->add_option("--type", type_text, "Type such as D4 or A1+B2")->required();
  classify->add_option("--field", field_text, "Minimal polynomial coefficients, low to high (empty: Q)");
  classify->add_option("--seed", seed, "Seed for randomized searches");
  classify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  classify->add_option("--out", out_path, "Database file")->required();
  classify->add_flag("--resume", resume, "Continue from the checkpoint beside --out");
  classify->add_option("--budget-gb", budget_gb, "Groebner pair budget")->check(CLI::PositiveNumber);
  classify->add_option("--budget-bt", budget_bt, "Backtracking node cap")->check(CLI::PositiveNumber);
  classify->add_option("--trials", trials, "Random trials per dense-orbit search")->check(CLI::PositiveNumber);
  classify->add_option("--cache", cache_dir, "Directory for per-type sub-databases");
  classify->add_flag("--quiet", quiet, "Suppress progress lines");

  std::string db_path;
  std::vector<int> ids;
  bool as_json = false;
  auto* query = app.add_subcommand("query", "Query a database");
  query->add_option("--db", db_path, "Database file")->required();
  query->require_subcommand(1);
  auto* q_list = query->add_subcommand("list", "Table of classes");
  auto* q_equiv = query->add_subcommand("equiv", "Linear equivalence of two classes");
  q_equiv->add_option("ids", ids)->required()->expected(2);
  auto* q_includes = query->add_subcommand("includes", "Whether the first class is included in the second");
  q_includes->add_option("ids", ids)->required()->expected(2);
  auto* q_chain = query->add_subcommand("chain", "Nested realization of a chain, smallest first");
  q_chain->add_option("ids", ids)->required()->expected(1, 1 << 20);
  q_chain->add_flag("--json", as_json, "Emit the realization as JSON");

  auto* verify = app.add_subcommand("verify", "Re-verify every stored invariant");
  verify->add_option("--db", db_path, "Database file")->required();

  auto* exporter = app.add_subcommand("export", "Human-readable dump of classes and generators");
  exporter->add_option("--db", db_path, "Database file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) {
      ClassifyOptions opts;
      opts.seed = seed;
      opts.jobs = jobs;
      opts.trials = trials;
      opts.pair_budget = budget_gb;
      opts.node_cap = budget_bt;
      opts.cache_dir = cache_dir;
      opts.checkpoint = out_path + ".checkpoint";
      opts.resume = resume;
      if (!quiet) opts.log = [](const std::string& line) { std::cerr << line << std::endl; };
      const LieType type = parse_type(type_text);
      Classifier ctx(parse_field(field_text), opts);
      const Database db = ctx.classify(type);
      {
        std::ofstream out(out_path);
        out << to_json(db).dump(1) << "\n";
      }
      const std::filesystem::path target = std::filesystem::absolute(out_path);
      const std::string stale = target.filename().string() + ".needs-operator.";
      for (const auto& entry : std::filesystem::directory_iterator(target.parent_path())) {
        if (entry.path().filename().string().rfind(stale, 0) == 0) std::filesystem::remove(entry.path());
      }
      for (std::size_t k = 0; k < db.pending.size(); ++k) {
        std::ofstream art(out_path + ".needs-operator." + std::to_string(k + 1) + ".txt");
        art << db.pending[k].artifact;
      }
      std::cerr << "classes=" << db.classes.size() << " pending=" << db.pending.size() << std::endl;
      return db.complete() ? kOk : kNeedsOperator;
    }
    const Database db = load(db_path);
    Classifier ctx(db.field);
    if (*query) {
      const auto L = ctx.algebra(db.ambient);
      if (*q_list) {
        std::cout << std::left << std::setw(5) << "id" << std::setw(14) << "type" << std::setw(10) << "index"
                  << std::setw(9) << "regular" << "maximal\n";
        for (const auto& c : db.classes) {
          std::cout << std::left << std::setw(5) << c.id << std::setw(14) << c.type.to_string() << std::setw(10)
                    << indices_text(db, c) << std::setw(9) << (c.flags.regular ? "yes" : "no")
                    << (c.flags.maximal ? "yes" : "no") << "\n";
        }
      } else if (*q_equiv) {
        const auto& a = db.by_id(ids[0]);
        const auto& b = db.by_id(ids[1]);
        const bool same = a.type == b.type && linearly_equivalent(*L, a.gens.h, b.gens.h);
        std::cout << (same ? "yes" : "no") << "\n";
      } else if (*q_includes) {
        const auto w = includes(db, ids[0], ids[1], ctx);
        if (w) {
          std::cout << "yes\nwitness hpart " << hpart_text(hpart_of(*L, *w)) << "\n";
        } else {
          std::cout << "no\n";
        }
      } else if (*q_chain) {
        const auto chain = realize_chain(db, ids, ctx);
        if (as_json) {
          json out = json::array();
          for (std::size_t i = 0; i < chain.size(); ++i) {
            json gens;
            for (const char* part : {"h", "x", "y"}) {
              const auto& vs = part[0] == 'h' ? chain[i].h : part[0] == 'x' ? chain[i].x : chain[i].y;
              json arr = json::array();
              for (const auto& v : vs) {
                json vec = json::array();
                for (const auto& e : v) {
                  json coords = json::array();
                  for (const auto& q : e.coords()) coords.push_back(to_string(q));
                  vec.push_back(coords);
                }
                arr.push_back(vec);
              }
              gens[part] = arr;
            }
            out.push_back({{"id", ids[i]}, {"gens", gens}});
          }
          std::cout << out.dump(1) << "\n";
        } else {
          for (std::size_t i = 0; i < chain.size(); ++i) {
            std::cout << ids[i] << " " << db.by_id(ids[i]).type.to_string() << " hpart "
                      << hpart_text(hpart_of(*L, chain[i])) << "\n";
          }
        }
      }
      return kOk;
    }
    if (*verify) {
      const std::string why = verify_database(db, ctx);
      if (!why.empty()) {
        std::cerr << why << std::endl;
        return kFailure;
      }
      std::cerr << "ok" << std::endl;
      return kOk;
    }
    if (*exporter) {
      std::cout << "ambient " << db.ambient.to_string() << " field " << db.field->to_string() << "\n";
      for (const auto& c : db.classes) {
        std::cout << "class " << c.id << " " << c.type.to_string() << " index " << indices_text(db, c)
                  << " hpart " << hpart_text(c.h_part) << "\n";
        for (int i = 0; i < c.gens.size(); ++i) {
          std::cout << "  x" << i + 1 << " = " << vector_text(c.gens.x[i]) << "\n";
          std::cout << "  y" << i + 1 << " = " << vector_text(c.gens.y[i]) << "\n";
        }
      }
      for (const auto& [a, b] : db.inclusions) std::cout << "inclusion " << a << " " << b << "\n";
      return kOk;
    }
  } catch (const UnknownId& e) {
    std::cerr << "unknown id: " << e.what() << std::endl;
    return kUnknownId;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << std::endl;
    return kBudget;
  } catch (const Undecided& e) {
    std::cerr << "budget exceeded: " << e.what() << std::endl;
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kFailure;
  }
  return kOk;
}
