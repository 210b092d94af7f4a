#include "liesub/candidates.hpp"

#include <numeric>
#include <sstream>

namespace liesub {

namespace {

using IntVec = std::vector<std::int64_t>;

bool is_leaf(const CartanMatrix& m, int i) {
  int degree = 0;
  for (int j = 0; j < static_cast<int>(m.size()); ++j) {
    if (j != i && m[i][j] != 0) ++degree;
  }
  return degree == 1;
}

bool has_single_bond(const CartanMatrix& m, int i) {
  for (int j = 0; j < static_cast<int>(m.size()); ++j) {
    if (j != i && m[i][j] != 0) return m[i][j] == -1 && m[j][i] == -1;
  }
  return false;
}

/// Bourbaki order of a simple type with the preferred leaf moved last.
std::vector<int> simple_leaf_last(const CartanMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> order;
  if (n == 1) return {0};
  int pick = -1;
  for (int i = n - 1; i >= 0 && pick < 0; --i) {
    if (is_leaf(m, i) && has_single_bond(m, i)) pick = i;
  }
  for (int i = n - 1; i >= 0 && pick < 0; --i) {
    if (is_leaf(m, i)) pick = i;
  }
  for (int i = 0; i < n; ++i) {
    if (i != pick) order.push_back(i);
  }
  order.push_back(pick);
  return order;
}

int component_score(SimpleType t) {
  const CartanMatrix m = simple_cartan_matrix(t);
  const auto order = simple_leaf_last(m);
  if (t.rank > 1 && has_single_bond(m, order.back())) return 2;
  return t.rank > 1 ? 1 : 0;
}

struct Model {
  /// Prefix nodes of the last node's component, and the scaled model values
  /// of the form between each of them and the last node.
  std::vector<int> nodes;
  std::vector<Rational> values;
  Rational theta;
  int attach = -1;
  bool single = false;
};

std::optional<Model> model_of(const RootSystem& ambient, const CartanMatrix& target,
                              const std::vector<CartanElement>& prefix) {
  const int r = static_cast<int>(target.size());
  const int last = r - 1;
  std::vector<int> gamma;
  for (const auto& comp : diagram_components(target)) {
    if (std::find(comp.begin(), comp.end(), last) != comp.end()) gamma = comp;
  }
  if (gamma.size() <= 1) return std::nullopt;
  const int s = static_cast<int>(gamma.size());
  CartanMatrix sub(s, std::vector<int>(s));
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) sub[a][b] = target[gamma[a]][gamma[b]];
  }
  const RootSystem model(sub);
  const auto& B = model.coroot_gram();
  const Rational eta = ambient.gram(prefix[gamma[0]], prefix[gamma[0]]) / B[0][0];
  if (eta <= 0) throw Infeasible("prefix element has nonpositive norm");
  for (int a = 0; a + 1 < s; ++a) {
    for (int b = 0; b + 1 < s; ++b) {
      if (ambient.gram(prefix[gamma[a]], prefix[gamma[b]]) != eta * B[a][b]) {
        throw Infeasible("prefix Gram is not a multiple of the model Gram");
      }
    }
  }
  Model out;
  for (int a = 0; a + 1 < s; ++a) {
    out.nodes.push_back(gamma[a]);
    out.values.push_back(eta * B[a][s - 1]);
    if (target[last][gamma[a]] != 0) out.attach = gamma[a];
  }
  out.theta = eta * B[s - 1][s - 1];
  out.single = target[last][out.attach] == -1 && target[out.attach][last] == -1;
  return out;
}

IntVec to_ints(const CartanElement& h) {
  IntVec v;
  for (const auto& x : h.labels) {
    if (!is_integer(x)) throw NonIntegralEigenvalue("candidate labels must be integers");
    v.push_back(to_int64(x));
  }
  return v;
}

CartanElement from_ints(const IntVec& v) {
  CartanElement h;
  for (auto x : v) h.labels.emplace_back(static_cast<long>(x));
  return h;
}

std::optional<std::int64_t> scaled(const Rational& q, std::int64_t den) {
  const Rational s = q * den;
  if (!is_integer(s)) return std::nullopt;
  return to_int64(s);
}

}  // namespace

std::string to_string(CandidateCase c) {
  switch (c) {
    case CandidateCase::base:
      return "base";
    case CandidateCase::attached_single:
      return "attached-1bond";
    case CandidateCase::attached_multi:
      return "attached-multibond";
    case CandidateCase::isolated:
      return "isolated";
  }
  return "?";
}

std::string format_stats(const CandidateStats& s) {
  std::ostringstream os;
  os << "candidates orbits_considered=" << s.orbits_considered << " orbits_swept=" << s.orbits_swept
     << " theta_rejected=" << s.theta_rejected << " puzzle_rejected=" << s.puzzle_rejected
     << " infeasible_prefixes=" << s.infeasible_prefixes << " elements_seen=" << s.elements_seen
     << " emitted=" << s.emitted;
  return os.str();
}

CartanMatrix leaf_last_cartan(const LieType& t) {
  const int k = static_cast<int>(t.components.size());
  if (k == 0) return {};
  int last = 0;
  for (int c = 1; c < k; ++c) {
    const auto key = [&](int i) { return std::make_pair(component_score(t.components[i]), t.components[i].rank); };
    if (key(c) >= key(last)) last = c;
  }
  std::vector<int> comp_order;
  for (int c = 0; c < k; ++c) {
    if (c != last) comp_order.push_back(c);
  }
  comp_order.push_back(last);
  std::vector<std::pair<CartanMatrix, std::vector<int>>> blocks;
  int n = 0;
  for (int c : comp_order) {
    const CartanMatrix m = simple_cartan_matrix(t.components[c]);
    std::vector<int> order(m.size());
    std::iota(order.begin(), order.end(), 0);
    if (c == last) order = simple_leaf_last(m);
    blocks.emplace_back(m, order);
    n += static_cast<int>(m.size());
  }
  CartanMatrix out(n, std::vector<int>(n, 0));
  int off = 0;
  for (const auto& [m, order] : blocks) {
    const int s = static_cast<int>(m.size());
    for (int a = 0; a < s; ++a) {
      for (int b = 0; b < s; ++b) out[off + a][off + b] = m[order[a]][order[b]];
    }
    off += s;
  }
  return out;
}

std::optional<Rational> theta_value(const RootSystem& ambient, const CartanMatrix& target,
                                    const std::vector<CartanElement>& prefix) {
  const auto m = model_of(ambient, target, prefix);
  if (!m) return std::nullopt;
  return m->theta;
}

bool puzzle_prefilter(const RootSystem& ambient, const std::vector<CartanElement>& prefix, const CartanElement& rep,
                      const CartanMatrix& target, const WeightMap& module) {
  auto tuple = prefix;
  tuple.push_back(rep);
  return solvable(puzzle_of(ambient, make_htuple(ambient, tuple), module, target));
}

void extend_candidates(const RootSystem& ambient, const CartanMatrix& target,
                       const std::vector<std::vector<CartanElement>>& h0,
                       const std::vector<CartanElement>& characteristics, const WeightMap& module,
                       const std::function<void(const CandidateTuple&)>& sink, CandidateStats* stats) {
  CandidateStats local;
  CandidateStats& st = stats ? *stats : local;
  const int r = static_cast<int>(target.size());
  if (r == 1) {
    for (int k = 0; k < static_cast<int>(characteristics.size()); ++k) {
      ++st.emitted;
      sink({{characteristics[k]}, -1, k, CandidateCase::base});
    }
    return;
  }
  const int l = ambient.rank();
  const auto& G = ambient.label_gram_int();
  const std::int64_t den = ambient.label_gram_denominator();
  auto times_g = [&](const IntVec& v) {
    IntVec out(l, 0);
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) out[i] += G[i][j] * v[j];
    }
    return out;
  };
  auto dot = [&](const IntVec& a, const IntVec& b) {
    std::int64_t s = 0;
    for (int i = 0; i < l; ++i) s += a[i] * b[i];
    return s;
  };
  std::vector<IntVec> chars;
  std::vector<std::int64_t> char_norms;
  for (const auto& c : characteristics) {
    chars.push_back(to_ints(c));
    char_norms.push_back(dot(times_g(chars.back()), chars.back()));
  }

  for (int pi = 0; pi < static_cast<int>(h0.size()); ++pi) {
    const auto& prefix = h0[pi];
    std::optional<Model> model;
    try {
      model = model_of(ambient, target, prefix);
    } catch (const Infeasible&) {
      ++st.infeasible_prefixes;
      continue;
    }
    // Required scaled form values against each prefix entry.
    std::vector<std::int64_t> want(r - 1, 0);
    std::optional<std::int64_t> theta_int;
    bool possible = true;
    CandidateCase tag = CandidateCase::isolated;
    if (model) {
      tag = model->single ? CandidateCase::attached_single : CandidateCase::attached_multi;
      for (std::size_t a = 0; a < model->nodes.size(); ++a) {
        const auto v = scaled(model->values[a], den);
        if (!v) possible = false;
        else want[model->nodes[a]] = *v;
      }
      theta_int = scaled(model->theta, den);
      if (!theta_int) possible = false;
    }
    if (!possible) {
      ++st.infeasible_prefixes;
      continue;
    }
    std::vector<IntVec> gp;
    for (const auto& h : prefix) gp.push_back(times_g(to_ints(h)));

    std::vector<int> orbits;
    if (model && model->single) {
      const auto dom = to_dominant(ambient, prefix[model->attach]).dominant;
      for (int k = 0; k < static_cast<int>(characteristics.size()); ++k) {
        if (characteristics[k] == dom) orbits.push_back(k);
      }
    } else {
      orbits.resize(characteristics.size());
      std::iota(orbits.begin(), orbits.end(), 0);
    }
    for (int k : orbits) {
      ++st.orbits_considered;
      if (theta_int && char_norms[k] != *theta_int) {
        ++st.theta_rejected;
        continue;
      }
      if (!puzzle_prefilter(ambient, prefix, characteristics[k], target, module)) {
        ++st.puzzle_rejected;
        continue;
      }
      ++st.orbits_swept;
      orbit_iterate_raw(ambient, chars[k], [&](const IntVec& u) {
        ++st.elements_seen;
        for (int a = 0; a + 1 < r; ++a) {
          if (dot(gp[a], u) != want[a]) return;
        }
        CandidateTuple t{prefix, pi, k, tag};
        t.h_part.push_back(from_ints(u));
        ++st.emitted;
        sink(t);
      });
    }
  }
}

}  // namespace liesub
