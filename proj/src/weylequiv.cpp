#include "liesub/weylequiv.hpp"

#include <algorithm>
#include <functional>

namespace liesub {

namespace {

using Labels = std::vector<Rational>;

/// Partially canonicalized tuple: `cur` are the images of the original
/// elements under `word`, and `allowed` generates the stabilizer of the
/// elements already fixed.
struct DescentState {
  std::vector<Labels> cur;
  std::vector<int> allowed;
  WeylWord word;
};

DescentState initial_state(const RootSystem& rs, const std::vector<CartanElement>& tuple) {
  DescentState s;
  for (const auto& h : tuple) s.cur.push_back(h.labels);
  s.allowed = all_nodes(rs.rank());
  return s;
}

/// Fixes element k of the state; returns its canonical image.
Labels fix_element(const RootSystem& rs, DescentState& s, int k, const std::vector<bool>& used) {
  Labels v = s.cur[k];
  const WeylWord u = descend_in_place(rs, v, s.allowed);
  if (!u.word.empty()) {
    for (std::size_t j = 0; j < s.cur.size(); ++j) {
      if (!used[j] && static_cast<int>(j) != k) apply_in_place(rs, u, s.cur[j]);
    }
    s.word = u * s.word;
  }
  s.cur[k] = v;
  std::vector<int> next;
  for (int i : s.allowed) {
    if (sgn(v[i]) == 0) next.push_back(i);
  }
  s.allowed = std::move(next);
  return v;
}

void check_shape(const HTuple& a, const HTuple& b) {
  if (a.size() != b.size()) throw GramMismatch("tuples have different lengths");
}

}  // namespace

HTuple make_htuple(const RootSystem& rs, std::vector<CartanElement> elements) {
  HTuple t;
  t.elements = std::move(elements);
  const std::size_t r = t.elements.size();
  t.gram.assign(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) t.gram[i][j] = t.gram[j][i] = rs.gram(t.elements[i], t.elements[j]);
  }
  return t;
}

std::vector<CartanElement> canonical_ordered(const RootSystem& rs, const std::vector<CartanElement>& tuple,
                                             WeylWord* witness) {
  DescentState s = initial_state(rs, tuple);
  std::vector<bool> used(tuple.size(), false);
  std::vector<CartanElement> out;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    out.push_back(CartanElement{fix_element(rs, s, static_cast<int>(k), used)});
    used[k] = true;
  }
  if (witness) *witness = s.word;
  return out;
}

std::optional<WeylWord> conjugate_ordered(const RootSystem& rs, const HTuple& a, const HTuple& b) {
  check_shape(a, b);
  if (a.gram != b.gram) return std::nullopt;
  WeylWord wa;
  WeylWord wb;
  if (canonical_ordered(rs, a.elements, &wa) != canonical_ordered(rs, b.elements, &wb)) return std::nullopt;
  return wb.inverse() * wa;
}

std::optional<SetConjugacy> conjugate_sets(const RootSystem& rs, const HTuple& a, const HTuple& b,
                                           std::size_t node_cap) {
  const int r = a.size();
  if (r != b.size()) return std::nullopt;
  // The multiset of Gram diagonal values is W-invariant and permutation-invariant.
  std::vector<Rational> da;
  std::vector<Rational> db;
  for (int i = 0; i < r; ++i) {
    da.push_back(a.gram[i][i]);
    db.push_back(b.gram[i][i]);
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;

  WeylWord wb;
  const auto target = canonical_ordered(rs, b.elements, &wb);
  std::vector<int> perm(r, -1);
  std::vector<bool> used(r, false);
  std::size_t nodes = 0;
  std::optional<SetConjugacy> found;

  std::function<bool(int, const DescentState&)> search = [&](int k, const DescentState& s) -> bool {
    if (k == r) {
      found = SetConjugacy{wb.inverse() * s.word, perm};
      return true;
    }
    for (int c = 0; c < r; ++c) {
      if (used[c]) continue;
      bool compatible = a.gram[c][c] == b.gram[k][k];
      for (int j = 0; j < k && compatible; ++j) compatible = a.gram[c][perm[j]] == b.gram[k][j];
      if (!compatible) continue;
      if (++nodes > node_cap) throw Undecided("conjugate_sets exceeded the backtracking node cap");
      DescentState next = s;
      if (fix_element(rs, next, c, used) != target[k].labels) continue;
      used[c] = true;
      perm[k] = c;
      if (search(k + 1, next)) return true;
      used[c] = false;
    }
    return false;
  };
  search(0, initial_state(rs, a.elements));
  return found;
}

SetKey set_key(const RootSystem& rs, const HTuple& a, std::size_t node_cap) {
  const int r = a.size();
  SetKey best;
  bool have = false;
  std::vector<Labels> prefix;
  std::vector<int> order;
  std::vector<bool> used(r, false);
  std::size_t nodes = 0;

  // Returns -1/0/1 comparing the current prefix with best on its length.
  auto compare_prefix = [&]() {
    if (!have) return -1;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] < best.elements[i].labels) return -1;
      if (best.elements[i].labels < prefix[i]) return 1;
    }
    return 0;
  };

  std::function<void(int, const DescentState&)> search = [&](int k, const DescentState& s) {
    if (k == r) {
      if (compare_prefix() < 0) {
        best.elements.clear();
        for (auto& v : prefix) best.elements.push_back(CartanElement{v});
        best.order = order;
        have = true;
      }
      return;
    }
    // Expand only the children whose fixed element is least.
    std::vector<std::pair<Labels, std::pair<int, DescentState>>> children;
    for (int c = 0; c < r; ++c) {
      if (used[c]) continue;
      if (++nodes > node_cap) throw Undecided("set_key exceeded the backtracking node cap");
      DescentState next = s;
      Labels v = fix_element(rs, next, c, used);
      children.push_back({std::move(v), {c, std::move(next)}});
    }
    if (children.empty()) return;
    const Labels* least = &children.front().first;
    for (const auto& ch : children) {
      if (ch.first < *least) least = &ch.first;
    }
    const Labels m = *least;
    for (auto& ch : children) {
      if (ch.first != m) continue;
      prefix.push_back(m);
      order.push_back(ch.second.first);
      if (compare_prefix() <= 0) {
        used[ch.second.first] = true;
        search(k + 1, ch.second.second);
        used[ch.second.first] = false;
      }
      prefix.pop_back();
      order.pop_back();
    }
  };
  search(0, initial_state(rs, a.elements));
  return best;
}

bool linearly_equivalent(const LieAlgebra& L, const std::vector<GVector>& hpart1, const std::vector<GVector>& hpart2,
                         std::size_t node_cap) {
  if (hpart1.size() != hpart2.size()) return false;
  std::vector<CartanElement> e1;
  std::vector<CartanElement> e2;
  for (const auto& u : hpart1) e1.push_back(L.cartan_element(u));
  for (const auto& u : hpart2) e2.push_back(L.cartan_element(u));
  const auto& rs = L.root_system();
  return conjugate_sets(rs, make_htuple(rs, std::move(e1)), make_htuple(rs, std::move(e2)), node_cap).has_value();
}

}  // namespace liesub
