#include "liesub/charpuzzle.hpp"

#include <algorithm>
#include <functional>
#include <list>
#include <memory>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace liesub {

namespace {

struct Geometry {
  RootSystem rs;
  /// Positive roots in fundamental-weight coordinates.
  std::vector<std::vector<int>> roots_fund;
  /// (omega_i, omega_j).
  linalg::Mat<Rational> fund_gram;
  /// (alpha_k, alpha_k) / 2.
  std::vector<Rational> half_norms;

  explicit Geometry(const CartanMatrix& c) : rs(c) {
    const int l = rs.rank();
    for (const auto& beta : rs.positive_roots()) {
      std::vector<int> f(l, 0);
      for (int j = 0; j < l; ++j) {
        for (int i = 0; i < l; ++i) f[j] += beta[i] * c[i][j];
      }
      roots_fund.push_back(f);
    }
    const auto& inv = rs.cartan_inverse();
    const auto& B = rs.bilinear_form();
    fund_gram.assign(l, std::vector<Rational>(l));
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) {
        Rational s = 0;
        for (int k = 0; k < l; ++k) {
          for (int m = 0; m < l; ++m) s += inv[i][k] * B[k][m] * inv[j][m];
        }
        fund_gram[i][j] = s;
      }
    }
    for (int k = 0; k < l; ++k) half_norms.push_back(B[k][k] / 2);
  }

  Rational form(const std::vector<int>& a, const std::vector<int>& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] != 0) s += fund_gram[i][j] * (a[i] * b[j]);
      }
    }
    return s;
  }
};

std::mutex g_cache_mutex;
std::map<CartanMatrix, std::unique_ptr<Geometry>> g_geometry;
std::map<std::pair<CartanMatrix, std::vector<int>>, std::unique_ptr<WeightMap>> g_weights;
std::map<std::pair<CartanMatrix, std::vector<int>>, std::unique_ptr<Puzzle>> g_module_puzzles;

const Geometry& geometry(const CartanMatrix& c) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto& slot = g_geometry[c];
  if (!slot) slot = std::make_unique<Geometry>(c);
  return *slot;
}

std::vector<int> dominant_of(const RootSystem& rs, std::vector<int> v) {
  descend_in_place(rs, v, all_nodes(rs.rank()), Action::weight);
  return v;
}

std::unique_ptr<WeightMap> compute_weights(const CartanMatrix& c, const std::vector<int>& lambda) {
  const Geometry& geo = geometry(c);
  const int l = geo.rs.rank();
  for (int v : lambda) {
    if (v < 0) throw NotDominant("highest weight must be dominant");
  }
  // Dominant weights below lambda, by subtracting positive roots.
  std::set<std::vector<int>> dominant{lambda};
  std::queue<std::vector<int>> todo;
  todo.push(lambda);
  while (!todo.empty()) {
    const auto mu = todo.front();
    todo.pop();
    for (const auto& a : geo.roots_fund) {
      std::vector<int> nu(l);
      bool dom = true;
      for (int i = 0; i < l; ++i) {
        nu[i] = mu[i] - a[i];
        dom = dom && nu[i] >= 0;
      }
      if (dom && dominant.insert(nu).second) todo.push(nu);
    }
  }
  // Freudenthal recursion in order of decreasing (lambda + rho)-norm gap.
  const std::vector<int> rho(l, 1);
  auto shifted = [&](const std::vector<int>& v) {
    std::vector<int> s(l);
    for (int i = 0; i < l; ++i) s[i] = v[i] + rho[i];
    return s;
  };
  const auto lr = shifted(lambda);
  const Rational top = geo.form(lr, lr);
  // Level: height of lambda - mu.
  const auto& inv = geo.rs.cartan_inverse();
  auto level = [&](const std::vector<int>& mu) {
    Rational h = 0;
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) h += (lambda[j] - mu[j]) * inv[j][i];
    }
    return h;
  };
  std::vector<std::pair<Rational, std::vector<int>>> order;
  for (const auto& mu : dominant) order.emplace_back(level(mu), mu);
  std::sort(order.begin(), order.end());
  std::map<std::vector<int>, std::int64_t> mult;
  for (const auto& [lev, mu] : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rational num = 0;
    for (std::size_t k = 0; k < geo.roots_fund.size(); ++k) {
      const auto& a = geo.roots_fund[k];
      std::vector<int> w = mu;
      for (;;) {
        for (int i = 0; i < l; ++i) w[i] += a[i];
        const auto it = mult.find(dominant_of(geo.rs, w));
        if (it == mult.end()) break;
        // (w, alpha) with alpha in root coordinates.
        Rational wa = 0;
        const auto& beta = geo.rs.positive_roots()[k];
        for (int i = 0; i < l; ++i) wa += beta[i] * w[i] * geo.half_norms[i];
        num += wa * it->second;
      }
    }
    const auto ms = shifted(mu);
    const Rational m = 2 * num / (top - geo.form(ms, ms));
    const std::int64_t mi = to_int64(m);
    if (mi > 0) mult[mu] = mi;
  }
  auto out = std::make_unique<WeightMap>();
  for (const auto& [mu, m] : mult) {
    orbit_iterate_raw(geo.rs, mu, [&](const std::vector<int>& v) { (*out)[v] = m; }, Action::weight);
  }
  return out;
}

std::string serialize(const Puzzle& p) {
  std::ostringstream os;
  for (const auto& f : p.f) {
    for (const auto& [e, c] : f) os << e << ':' << c << ',';
    os << ';';
  }
  return os.str();
}

std::int64_t mass(const LaurentPoly& f) {
  std::int64_t s = 0;
  for (const auto& [e, c] : f) s += c;
  return s;
}

/// Bounded LRU set of residual puzzles known to be unsolvable.
class FailureMemo {
 public:
  explicit FailureMemo(std::size_t cap) : cap_(cap) {}

  bool contains(const std::string& key) {
    auto it = index_.find(key);
    if (it == index_.end()) return false;
    order_.splice(order_.begin(), order_, it->second);
    return true;
  }

  void insert(const std::string& key) {
    if (cap_ == 0) return;
    order_.push_front(key);
    index_[key] = order_.begin();
    if (index_.size() > cap_) {
      index_.erase(order_.back());
      order_.pop_back();
    }
  }

 private:
  std::size_t cap_;
  std::list<std::string> order_;
  std::unordered_map<std::string, std::list<std::string>::iterator> index_;
};

}  // namespace

const WeightMap& weight_multiplicities(const CartanMatrix& cartan, const std::vector<int>& highest) {
  const auto key = std::make_pair(cartan, highest);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_weights.find(key);
    if (it != g_weights.end()) return *it->second;
  }
  auto computed = compute_weights(cartan, highest);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto& slot = g_weights[key];
  if (!slot) slot = std::move(computed);
  return *slot;
}

std::int64_t weyl_dimension(const CartanMatrix& cartan, const std::vector<int>& highest) {
  const Geometry& geo = geometry(cartan);
  Rational d = 1;
  for (const auto& beta : geo.rs.positive_roots()) {
    Rational a = 0;
    Rational b = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      a += beta[i] * (highest[i] + 1) * geo.half_norms[i];
      b += beta[i] * geo.half_norms[i];
    }
    d *= a / b;
  }
  return to_int64(d);
}

Puzzle puzzle_of(const RootSystem& ambient, const HTuple& h_tuple, const WeightMap& module_weights,
                 const CartanMatrix& target) {
  Puzzle p;
  p.cartan = target;
  const int l = ambient.rank();
  std::vector<std::vector<Rational>> co;
  for (const auto& h : h_tuple.elements) co.push_back(ambient.labels_to_coroot(h.labels));
  p.f.resize(co.size());
  for (const auto& [nu, m] : module_weights) {
    for (std::size_t i = 0; i < co.size(); ++i) {
      Rational v = 0;
      for (int j = 0; j < l; ++j) {
        if (nu[j] != 0) v += co[i][j] * nu[j];
      }
      if (!is_integer(v)) throw NonIntegralEigenvalue("weight evaluates to " + to_string(v));
      p.f[i][static_cast<int>(to_int64(v))] += m;
    }
  }
  return p;
}

Puzzle module_puzzle(const CartanMatrix& target, const std::vector<int>& highest) {
  const auto key = std::make_pair(target, highest);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_module_puzzles.find(key);
    if (it != g_module_puzzles.end()) return *it->second;
  }
  Puzzle p;
  p.cartan = target;
  p.f.resize(target.size());
  for (const auto& [mu, m] : weight_multiplicities(target, highest)) {
    for (std::size_t i = 0; i < target.size(); ++i) p.f[i][mu[i]] += m;
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto& slot = g_module_puzzles[key];
  if (!slot) slot = std::make_unique<Puzzle>(p);
  return *slot;
}

bool solvable(const Puzzle& p, std::size_t memo_cap) {
  const int r = static_cast<int>(p.f.size());
  FailureMemo memo(memo_cap);

  std::function<bool(const Puzzle&)> solve = [&](const Puzzle& cur) -> bool {
    std::int64_t total = -1;
    for (const auto& f : cur.f) {
      for (const auto& [e, c] : f) {
        if (c < 0) return false;
      }
      const std::int64_t m = mass(f);
      if (total >= 0 && m != total) return false;
      total = m;
    }
    if (total <= 0) return true;
    const std::string key = serialize(cur);
    if (memo.contains(key)) return false;

    // Some constituent reaches the largest exponent of the chosen index.
    int pick = 0;
    int pick_max = cur.f[0].rbegin()->first;
    for (int i = 1; i < r; ++i) {
      const int m = cur.f[i].rbegin()->first;
      if (m > pick_max) {
        pick = i;
        pick_max = m;
      }
    }
    std::vector<std::vector<int>> values(r);
    for (int i = 0; i < r; ++i) {
      for (const auto& [e, c] : cur.f[i]) {
        if (e >= 0 && c > 0) values[i].push_back(e);
      }
    }
    struct Candidate {
      std::vector<int> e;
      int top;
      std::int64_t dim;
    };
    std::vector<Candidate> cands;
    std::vector<int> e(r, 0);
    std::function<void(int)> enumerate = [&](int i) {
      if (i == r) {
        const std::int64_t dim = weyl_dimension(cur.cartan, e);
        if (dim > total) return;
        const Puzzle g = module_puzzle(cur.cartan, e);
        if (g.f[pick].rbegin()->first != pick_max) return;
        cands.push_back({e, pick_max, dim});
        return;
      }
      for (int v : values[i]) {
        e[i] = v;
        std::vector<int> probe = e;
        for (int k = i + 1; k < r; ++k) probe[k] = 0;
        // Dimension grows with every coordinate.
        if (weyl_dimension(cur.cartan, probe) > total) break;
        enumerate(i + 1);
      }
      e[i] = 0;
    };
    enumerate(0);
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      const int ma = *std::max_element(a.e.begin(), a.e.end());
      const int mb = *std::max_element(b.e.begin(), b.e.end());
      if (ma != mb) return ma > mb;
      if (a.dim != b.dim) return a.dim > b.dim;
      return a.e < b.e;
    });
    for (const auto& c : cands) {
      const Puzzle g = module_puzzle(cur.cartan, c.e);
      Puzzle rest = cur;
      bool ok = true;
      for (int i = 0; i < r && ok; ++i) {
        for (const auto& [ex, m] : g.f[i]) {
          auto& slot = rest.f[i][ex];
          slot -= m;
          if (slot < 0) {
            ok = false;
            break;
          }
          if (slot == 0) rest.f[i].erase(ex);
        }
      }
      if (ok && solve(rest)) return true;
    }
    memo.insert(key);
    return false;
  };
  return solve(p);
}

WeightMap smallest_module(const CartanMatrix& ambient) {
  const int l = static_cast<int>(ambient.size());
  WeightMap out;
  for (const auto& comp : diagram_components(ambient)) {
    CartanMatrix sub(comp.size(), std::vector<int>(comp.size()));
    for (std::size_t a = 0; a < comp.size(); ++a) {
      for (std::size_t b = 0; b < comp.size(); ++b) sub[a][b] = ambient[comp[a]][comp[b]];
    }
    std::size_t best = 0;
    std::int64_t best_dim = -1;
    for (std::size_t a = 0; a < comp.size(); ++a) {
      std::vector<int> w(comp.size(), 0);
      w[a] = 1;
      const std::int64_t d = weyl_dimension(sub, w);
      if (best_dim < 0 || d < best_dim) {
        best = a;
        best_dim = d;
      }
    }
    std::vector<int> w(comp.size(), 0);
    w[best] = 1;
    for (const auto& [mu, m] : weight_multiplicities(sub, w)) {
      std::vector<int> full(l, 0);
      for (std::size_t a = 0; a < comp.size(); ++a) full[comp[a]] = mu[a];
      out[full] += m;
    }
  }
  return out;
}

}  // namespace liesub
