#include "liesub/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace liesub {

namespace {

bool valid_simple(SimpleType t) {
  switch (t.letter) {
    case 'A':
      return t.rank >= 1;
    case 'B':
      return t.rank >= 2;
    case 'C':
      return t.rank >= 2;
    case 'D':
      return t.rank >= 4;
    case 'E':
      return t.rank >= 6 && t.rank <= 8;
    case 'F':
      return t.rank == 4;
    case 'G':
      return t.rank == 2;
    default:
      return false;
  }
}

// C2 and B2 are the same algebra; keep B2 as the canonical name.
SimpleType normalize(SimpleType t) {
  if (t.letter == 'C' && t.rank == 2) t.letter = 'B';
  return t;
}

std::vector<SimpleType> candidates_of_rank(int n) {
  std::vector<SimpleType> out;
  for (char letter : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
    SimpleType t{letter, n};
    if (valid_simple(t) && normalize(t) == t) out.push_back(t);
  }
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
  return r;
}

std::uint64_t simple_weyl_order(SimpleType t) {
  switch (t.letter) {
    case 'A':
      return factorial(t.rank + 1);
    case 'B':
    case 'C':
      return (std::uint64_t{1} << t.rank) * factorial(t.rank);
    case 'D':
      return (std::uint64_t{1} << (t.rank - 1)) * factorial(t.rank);
    case 'E':
      return t.rank == 6 ? 51840 : t.rank == 7 ? 2903040 : 696729600;
    case 'F':
      return 1152;
    default:
      return 12;
  }
}

CartanMatrix submatrix(const CartanMatrix& c, const std::vector<int>& nodes) {
  CartanMatrix out(nodes.size(), std::vector<int>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) out[i][j] = c[nodes[i]][nodes[j]];
  }
  return out;
}

void iso_search(const CartanMatrix& c, const CartanMatrix& d, std::vector<int>& p, std::vector<bool>& used,
                std::vector<std::vector<int>>& out, std::size_t limit) {
  const std::size_t k = p.size();
  const std::size_t n = d.size();
  if (k == n) {
    out.push_back(p);
    return;
  }
  for (std::size_t cand = 0; cand < n && out.size() < limit; ++cand) {
    if (used[cand]) continue;
    if (c[cand][cand] != d[k][k]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      ok = c[cand][p[j]] == d[k][j] && c[p[j]][cand] == d[j][k];
    }
    if (!ok) continue;
    used[cand] = true;
    p.push_back(static_cast<int>(cand));
    iso_search(c, d, p, used, out, limit);
    p.pop_back();
    used[cand] = false;
  }
}

}  // namespace

int LieType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string LieType::to_string() const {
  if (components.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += "+";
    s += components[i].to_string();
  }
  return s;
}

CartanMatrix LieType::cartan_matrix() const {
  const int n = rank();
  CartanMatrix out(n, std::vector<int>(n, 0));
  int offset = 0;
  for (const auto& comp : components) {
    const CartanMatrix block = simple_cartan_matrix(comp);
    for (int i = 0; i < comp.rank; ++i) {
      for (int j = 0; j < comp.rank; ++j) out[offset + i][offset + j] = block[i][j];
    }
    offset += comp.rank;
  }
  return out;
}

int LieType::dimension() const {
  int d = 0;
  for (const auto& t : components) {
    const int n = t.rank;
    switch (t.letter) {
      case 'A':
        d += n * (n + 2);
        break;
      case 'B':
      case 'C':
        d += n * (2 * n + 1);
        break;
      case 'D':
        d += n * (2 * n - 1);
        break;
      case 'E':
        d += n == 6 ? 78 : n == 7 ? 133 : 248;
        break;
      case 'F':
        d += 52;
        break;
      default:
        d += 14;
    }
  }
  return d;
}

LieType parse_type(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  LieType out;
  if (s.empty() || s == "0") return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find('+', pos), s.size());
    const std::string tok = s.substr(pos, end - pos);
    std::size_t k = 0;
    int mult = 0;
    while (k < tok.size() && std::isdigit(static_cast<unsigned char>(tok[k]))) mult = mult * 10 + (tok[k++] - '0');
    if (k == 0) mult = 1;
    if (k >= tok.size() || !std::isalpha(static_cast<unsigned char>(tok[k]))) {
      throw InvalidType("cannot parse type '" + text + "'");
    }
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[k++])));
    if (k >= tok.size()) throw InvalidType("missing rank in '" + tok + "'");
    int rank = 0;
    for (; k < tok.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(tok[k]))) throw InvalidType("bad rank in '" + tok + "'");
      rank = rank * 10 + (tok[k] - '0');
      if (rank > 1000) throw InvalidType("rank too large in '" + tok + "'");
    }
    SimpleType t{letter, rank};
    if (!valid_simple(t)) throw InvalidType("unknown simple type '" + tok + "'");
    if (mult < 1) throw InvalidType("zero multiplicity in '" + tok + "'");
    for (int m = 0; m < mult; ++m) out.components.push_back(normalize(t));
    if (end == s.size()) break;
    pos = end + 1;
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

CartanMatrix simple_cartan_matrix(SimpleType t) {
  if (!valid_simple(t)) throw InvalidType("unknown simple type " + t.to_string());
  const int n = t.rank;
  CartanMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t.letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(2, 3);
      c[1][2] = -2;
      c[2][1] = -1;
      break;
    case 'G':
      c[0][1] = -1;
      c[1][0] = -3;
      break;
    default:
      break;
  }
  return c;
}

std::vector<std::vector<int>> diagram_components(const CartanMatrix& c) {
  const int n = static_cast<int>(c.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const int i = nodes[k];
      for (int j = 0; j < n; ++j) {
        if (comp[j] < 0 && (c[i][j] != 0 || c[j][i] != 0)) {
          comp[j] = comp[s];
          nodes.push_back(j);
        }
      }
    }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(std::move(nodes));
  }
  return out;
}

std::vector<std::vector<int>> cartan_isomorphisms(const CartanMatrix& c, const CartanMatrix& d, std::size_t limit) {
  std::vector<std::vector<int>> out;
  if (c.size() != d.size()) return out;
  std::vector<int> p;
  std::vector<bool> used(c.size(), false);
  iso_search(c, d, p, used, out, limit);
  return out;
}

std::pair<LieType, std::vector<int>> identify(const CartanMatrix& c) {
  const std::size_t n = c.size();
  for (const auto& row : c) {
    if (row.size() != n) throw InvalidCartanMatrix("matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i][i] != 2) throw InvalidCartanMatrix("diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0) throw InvalidCartanMatrix("positive off-diagonal entry");
      if ((c[i][j] == 0) != (c[j][i] == 0)) throw InvalidCartanMatrix("zero pattern is not symmetric");
    }
  }
  struct Piece {
    SimpleType type;
    std::vector<int> order;
  };
  std::vector<Piece> pieces;
  for (const auto& nodes : diagram_components(c)) {
    const CartanMatrix sub = submatrix(c, nodes);
    bool found = false;
    for (SimpleType t : candidates_of_rank(static_cast<int>(nodes.size()))) {
      const auto iso = cartan_isomorphisms(sub, simple_cartan_matrix(t), 1);
      if (iso.empty()) continue;
      std::vector<int> order;
      for (int k : iso.front()) order.push_back(nodes[k]);
      pieces.push_back({t, std::move(order)});
      found = true;
      break;
    }
    if (!found) throw InvalidCartanMatrix("component is not of finite type");
  }
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.type < b.type; });
  LieType type;
  std::vector<int> order;
  for (auto& p : pieces) {
    type.components.push_back(p.type);
    order.insert(order.end(), p.order.begin(), p.order.end());
  }
  return {type, order};
}

bool CartanElement::is_dominant() const {
  return std::all_of(labels.begin(), labels.end(), [](const Rational& q) { return sgn(q) >= 0; });
}

WeylWord WeylWord::inverse() const { return WeylWord{{word.rbegin(), word.rend()}}; }

WeylWord operator*(const WeylWord& a, const WeylWord& b) {
  WeylWord r = a;
  r.word.insert(r.word.end(), b.word.begin(), b.word.end());
  return r;
}

RootSystem::RootSystem(CartanMatrix cartan) : cartan_(std::move(cartan)) {
  identify(cartan_);
  const int l = rank();
  components_ = diagram_components(cartan_);
  component_of_.assign(l, -1);
  for (std::size_t k = 0; k < components_.size(); ++k) {
    for (int i : components_[k]) component_of_[i] = static_cast<int>(k);
  }

  // Positive roots layer by layer via root strings.
  std::set<RootVec> known;
  std::vector<RootVec> layer;
  for (int i = 0; i < l; ++i) {
    RootVec e(l, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  int h = 1;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), std::greater<>());
    for (const auto& r : layer) {
      positive_.push_back(r);
      heights_.push_back(h);
    }
    std::set<RootVec> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < l; ++i) {
        int p = 0;
        RootVec down = beta;
        for (;;) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        const int q = p - pairing_with_coroot(beta, i);
        if (q > 0) {
          RootVec up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
    ++h;
  }
  const int npos = num_positive();
  for (int k = 0; k < npos; ++k) {
    index_.emplace_back(positive_[k], k);
    RootVec neg = positive_[k];
    for (auto& x : neg) x = -x;
    index_.emplace_back(neg, npos + k);
  }
  std::sort(index_.begin(), index_.end());

  // Symmetrizer: C(i,j) |alpha_j|^2 = C(j,i) |alpha_i|^2.
  norms_.assign(l, Rational(0));
  for (const auto& nodes : components_) {
    norms_[nodes.front()] = 1;
    std::vector<int> queue{nodes.front()};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const int i = queue[k];
      for (int j : nodes) {
        if (cartan_[i][j] == 0 || i == j) continue;
        const Rational nj = Rational(cartan_[j][i]) * norms_[i] / cartan_[i][j];
        if (sgn(norms_[j]) == 0) {
          norms_[j] = nj;
          queue.push_back(j);
        } else if (norms_[j] != nj) {
          throw InvalidCartanMatrix("matrix is not symmetrizable");
        }
      }
    }
    Rational lo = norms_[nodes.front()];
    Rational hi = lo;
    for (int i : nodes) {
      lo = std::min(lo, norms_[i]);
      hi = std::max(hi, norms_[i]);
    }
    const Rational scale = Rational(2) / lo;
    for (int i : nodes) norms_[i] *= scale;
  }
  form_.assign(l, std::vector<Rational>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) form_[i][j] = Rational(cartan_[i][j]) * norms_[j] / 2;
  }

  // Form on h: (alpha_i^vee, alpha_j^vee) = 2 C(i,j) / |alpha_i|^2, with the
  // long roots of each component of length 2.
  std::vector<Rational> long_norms(l);
  for (const auto& nodes : components_) {
    Rational hi = 0;
    for (int i : nodes) hi = std::max(hi, norms_[i]);
    for (int i : nodes) long_norms[i] = norms_[i] * 2 / hi;
  }
  coroot_gram_.assign(l, std::vector<Rational>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) coroot_gram_[i][j] = Rational(2 * cartan_[i][j]) / long_norms[i];
  }
  linalg::Mat<Rational> cq(l, std::vector<Rational>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) cq[i][j] = cartan_[i][j];
  }
  cartan_inverse_ = l ? linalg::inverse(cq) : linalg::Mat<Rational>{};
  label_gram_.assign(l, std::vector<Rational>(l));
  for (int a = 0; a < l; ++a) {
    for (int b = 0; b < l; ++b) {
      Rational s = 0;
      for (int i = 0; i < l; ++i) {
        if (sgn(cartan_inverse_[i][a]) == 0) continue;
        for (int j = 0; j < l; ++j) s += cartan_inverse_[i][a] * coroot_gram_[i][j] * cartan_inverse_[j][b];
      }
      label_gram_[a][b] = s;
    }
  }
  Integer den = 1;
  for (const auto& row : label_gram_) {
    for (const auto& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  label_gram_den_ = den.get_si();
  label_gram_int_.assign(l, std::vector<std::int64_t>(l));
  for (int a = 0; a < l; ++a) {
    for (int b = 0; b < l; ++b) label_gram_int_[a][b] = to_int64(label_gram_[a][b] * den);
  }
}

RootSystem build_root_system(const CartanMatrix& cartan) { return RootSystem(cartan); }

Rational RootSystem::inner(const RootVec& beta, const RootVec& gamma) const {
  Rational s = 0;
  const int l = rank();
  for (int i = 0; i < l; ++i) {
    if (beta[i] == 0) continue;
    for (int j = 0; j < l; ++j) {
      if (gamma[j] != 0) s += form_[i][j] * (beta[i] * gamma[j]);
    }
  }
  return s;
}

std::optional<int> RootSystem::root_index(const RootVec& v) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), v,
                             [](const std::pair<RootVec, int>& e, const RootVec& key) { return e.first < key; });
  if (it == index_.end() || it->first != v) return std::nullopt;
  return it->second;
}

RootVec RootSystem::root(int index) const {
  const int npos = num_positive();
  if (index < npos) return positive_[index];
  RootVec r = positive_[index - npos];
  for (auto& x : r) x = -x;
  return r;
}

int RootSystem::pairing_with_coroot(const RootVec& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += beta[j] * cartan_[j][i];
  return s;
}

RootVec RootSystem::coroot_coordinates(const RootVec& beta) const {
  // beta^vee = sum_i k_i |alpha_i|^2 / |beta|^2 alpha_i^vee
  const Rational nb = inner(beta, beta);
  RootVec out(rank());
  for (int i = 0; i < rank(); ++i) out[i] = static_cast<int>(to_int64(Rational(beta[i]) * norms_[i] / nb));
  return out;
}

Rational RootSystem::gram(const CartanElement& a, const CartanElement& b) const {
  Rational s = 0;
  const int l = rank();
  for (int i = 0; i < l; ++i) {
    if (sgn(a.labels[i]) == 0) continue;
    for (int j = 0; j < l; ++j) {
      if (sgn(b.labels[j]) != 0 && sgn(label_gram_[i][j]) != 0) s += a.labels[i] * label_gram_[i][j] * b.labels[j];
    }
  }
  return s;
}

std::vector<Rational> RootSystem::labels_to_coroot(const std::vector<Rational>& labels) const {
  const int l = rank();
  std::vector<Rational> c(l);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) c[i] += cartan_inverse_[i][j] * labels[j];
  }
  return c;
}

std::vector<Rational> RootSystem::coroot_to_labels(const std::vector<Rational>& coords) const {
  // alpha_j(h) = sum_i c_i C(j, i)
  const int l = rank();
  std::vector<Rational> d(l);
  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < l; ++i) {
      if (cartan_[j][i] != 0) d[j] += coords[i] * cartan_[j][i];
    }
  }
  return d;
}

CartanElement reflect(const RootSystem& rs, int i, const CartanElement& h) {
  CartanElement r = h;
  reflect_in_place(rs, i, r.labels);
  return r;
}

CartanElement apply(const RootSystem& rs, const WeylWord& w, const CartanElement& h) {
  CartanElement r = h;
  apply_in_place(rs, w, r.labels);
  return r;
}

std::vector<int> all_nodes(int rank) {
  std::vector<int> v(rank);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

DominantResult to_dominant(const RootSystem& rs, const CartanElement& h) {
  DominantResult r{h, {}};
  r.witness = descend_in_place(rs, r.dominant.labels, all_nodes(rs.rank()));
  return r;
}

std::size_t orbit_iterate(const RootSystem& rs, const CartanElement& dominant_h,
                          const std::function<void(const CartanElement&)>& visitor, OrbitStats* stats) {
  CartanElement tmp;
  return orbit_iterate_raw(
      rs, dominant_h.labels,
      [&](const std::vector<Rational>& v) {
        tmp.labels = v;
        visitor(tmp);
      },
      Action::coweight, stats);
}

std::uint64_t weyl_order(const RootSystem& rs) {
  std::vector<std::int64_t> regular(rs.rank(), 1);
  return orbit_iterate_raw(rs, regular, [](const std::vector<std::int64_t>&) {});
}

std::uint64_t weyl_order_from_type(const RootSystem& rs) {
  std::uint64_t order = 1;
  for (const auto& t : identify(rs.cartan()).first.components) order *= simple_weyl_order(t);
  return order;
}

std::uint64_t orbit_size(const RootSystem& rs, const std::vector<std::int64_t>& dominant, Action) {
  // The stabilizer of a dominant vector is the parabolic subgroup generated
  // by the reflections fixing it.
  std::vector<int> zero;
  for (int i = 0; i < rs.rank(); ++i) {
    if (dominant[i] < 0) throw NotDominant("orbit_size needs a dominant vector");
    if (dominant[i] == 0) zero.push_back(i);
  }
  std::uint64_t stab = 1;
  if (!zero.empty()) {
    for (const auto& t : identify(submatrix(rs.cartan(), zero)).first.components) stab *= simple_weyl_order(t);
  }
  return weyl_order_from_type(rs) / stab;
}

}  // namespace liesub
