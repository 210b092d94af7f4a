#include "liesub/chevalley.hpp"

#include <functional>
#include <sstream>

namespace liesub {

namespace {

RootVec add_roots(const RootVec& a, const RootVec& b) {
  RootVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

}  // namespace

LieAlgebra::LieAlgebra(RootSystem rs, Field field)
    : rs_(std::move(rs)), field_(field), npos_(rs_.num_positive()) {
  const int l = rs_.rank();
  const int nroots = 2 * npos_;
  dim_ = nroots + l;

  basis_roots_.resize(dim_, RootVec(l, 0));
  for (int r = 0; r < nroots; ++r) basis_roots_[r] = rs_.root(r);
  weights_.assign(dim_, std::vector<int>(l, 0));
  for (int b = 0; b < nroots; ++b) {
    for (int i = 0; i < l; ++i) weights_[b][i] = rs_.pairing_with_coroot(basis_roots_[b], i);
  }

  // Structure constants on positive pairs, by increasing height of the sum.
  n_.assign(nroots, std::vector<std::int64_t>(nroots, 0));
  std::vector<std::vector<bool>> known(nroots, std::vector<bool>(nroots, false));
  auto neg = [&](int r) { return r < npos_ ? r + npos_ : r - npos_; };
  auto norm = [&](int r) { return rs_.inner(rs_.root(r), rs_.root(r)); };
  auto sum_index = [&](int a, int b) { return rs_.root_index(add_roots(rs_.root(a), rs_.root(b))); };

  std::function<std::int64_t(int, int)> N = [&](int a, int b) -> std::int64_t {
    const auto c = sum_index(a, b);
    if (!c) return 0;
    const bool pa = a < npos_;
    const bool pb = b < npos_;
    if (pa && pb) {
      if (!known[a][b]) throw Error("structure constant requested out of order");
      return n_[a][b];
    }
    if (!pa && !pb) return -N(neg(a), neg(b));
    if (!pa) return -N(b, a);
    // a positive, b negative; gamma = -(a+b) closes the triangle.
    Rational v;
    if (*c < npos_) {
      v = -norm(*c) / norm(a) * Rational(N(neg(b), *c));
    } else {
      v = norm(*c) / norm(b) * Rational(N(neg(*c), a));
    }
    return to_int64(v);
  };

  for (int xi = 0; xi < npos_; ++xi) {
    if (rs_.height(xi) == 1) continue;
    const RootVec& rxi = rs_.positive_roots()[xi];
    int g = -1;
    int d = -1;
    for (int i = 0; i < l && g < 0; ++i) {
      RootVec rest = rxi;
      rest[i] -= 1;
      if (auto idx = rs_.root_index(rest); idx && *idx < npos_) {
        g = i;
        d = *idx;
      }
    }
    int p = 0;
    {
      RootVec down = rs_.root(d);
      for (;;) {
        down[g] -= 1;
        if (!rs_.root_index(down)) break;
        ++p;
      }
    }
    n_[g][d] = p + 1;
    n_[d][g] = -(p + 1);
    known[g][d] = known[d][g] = true;
    const Rational nxi = norm(xi);
    for (int a = 0; a < npos_; ++a) {
      for (int b = a + 1; b < npos_; ++b) {
        if (a == g && b == d) continue;
        const auto s = sum_index(a, b);
        if (!s || *s != xi) continue;
        Rational acc = 0;
        if (auto bg = sum_index(b, neg(g))) {
          acc += Rational(N(b, neg(g)) * N(a, neg(d))) / norm(*bg);
        }
        if (auto ag = sum_index(a, neg(g))) {
          acc += Rational(N(neg(g), a) * N(b, neg(d))) / norm(*ag);
        }
        const std::int64_t v = to_int64(nxi / Rational(n_[g][d]) * acc);
        n_[a][b] = v;
        n_[b][a] = -v;
        known[a][b] = known[b][a] = true;
      }
    }
  }
  for (int a = 0; a < nroots; ++a) {
    for (int b = 0; b < nroots; ++b) {
      if (a < npos_ && b < npos_) continue;
      n_[a][b] = N(a, b);
    }
  }

  table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  for (int a = 0; a < nroots; ++a) {
    for (int b = 0; b < nroots; ++b) {
      auto& cell = table_[a * dim_ + b];
      if (b == neg(a)) {
        const int pos = a < npos_ ? a : b;
        const std::int64_t sign = a < npos_ ? 1 : -1;
        const RootVec co = rs_.coroot_coordinates(rs_.root(pos));
        for (int i = 0; i < l; ++i) {
          if (co[i] != 0) cell.push_back({h_index(i), sign * co[i]});
        }
      } else if (n_[a][b] != 0) {
        cell.push_back({*sum_index(a, b), n_[a][b]});
      }
    }
  }
  for (int i = 0; i < l; ++i) {
    for (int b = 0; b < nroots; ++b) {
      const int w = weights_[b][i];
      if (w == 0) continue;
      table_[h_index(i) * dim_ + b].push_back({b, w});
      table_[b * dim_ + h_index(i)].push_back({b, -w});
    }
  }

  // Killing form: only weight-opposite pairs can pair nontrivially.
  killing_.assign(dim_, std::vector<std::int64_t>(dim_, 0));
  auto ad_dense = [&](int i) {
    std::vector<std::vector<std::int64_t>> m(dim_, std::vector<std::int64_t>(dim_, 0));
    for (int j = 0; j < dim_; ++j) {
      for (const auto& t : table_[i * dim_ + j]) m[t.index][j] += t.coeff;
    }
    return m;
  };
  std::vector<std::vector<std::vector<std::int64_t>>> ads(dim_);
  for (int i = 0; i < dim_; ++i) ads[i] = ad_dense(i);
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      if (add_roots(basis_roots_[i], basis_roots_[j]) != RootVec(l, 0)) continue;
      std::int64_t tr = 0;
      for (int c = 0; c < dim_; ++c) {
        for (int e = 0; e < dim_; ++e) {
          if (ads[i][c][e] != 0 && ads[j][e][c] != 0) tr += ads[i][c][e] * ads[j][e][c];
        }
      }
      killing_[i][j] = killing_[j][i] = tr;
    }
  }
}

std::int64_t LieAlgebra::structure_constant(int a, int b) const { return n_[a][b]; }

GVector LieAlgebra::zero() const { return GVector(dim_, FieldElement(field_)); }

GVector LieAlgebra::basis_vector(int i) const {
  GVector v = zero();
  v[i] = FieldElement(field_, Rational(1));
  return v;
}

GVector LieAlgebra::bracket(const GVector& u, const GVector& v) const {
  GVector out = zero();
  std::vector<int> nu;
  std::vector<int> nv;
  for (int i = 0; i < dim_; ++i) {
    if (!u[i].is_zero()) nu.push_back(i);
    if (!v[i].is_zero()) nv.push_back(i);
  }
  for (int a : nu) {
    for (int b : nv) {
      const auto& cell = table_[a * dim_ + b];
      if (cell.empty()) continue;
      const FieldElement prod = u[a] * v[b];
      for (const auto& t : cell) out[t.index] += prod * Rational(t.coeff);
    }
  }
  return out;
}

GVector LieAlgebra::cartan_vector(const CartanElement& h) const {
  GVector v = zero();
  const auto c = rs_.labels_to_coroot(h.labels);
  for (int i = 0; i < rank(); ++i) v[h_index(i)] = FieldElement(field_, c[i]);
  return v;
}

CartanElement LieAlgebra::cartan_element(const GVector& u) const {
  for (int b = 0; b < 2 * npos_; ++b) {
    if (!u[b].is_zero()) throw NotInCartan("vector has a root component");
  }
  std::vector<Rational> c(rank());
  for (int i = 0; i < rank(); ++i) {
    if (!u[h_index(i)].is_rational()) throw NotInCartan("irrational Cartan coordinate");
    c[i] = u[h_index(i)].rational_part();
  }
  return CartanElement{rs_.coroot_to_labels(c)};
}

linalg::Mat<FieldElement> LieAlgebra::ad_matrix(const GVector& u) const {
  linalg::Mat<FieldElement> m(dim_, std::vector<FieldElement>(dim_, FieldElement(field_)));
  for (int a = 0; a < dim_; ++a) {
    if (u[a].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      for (const auto& t : table_[a * dim_ + j]) m[t.index][j] += u[a] * Rational(t.coeff);
    }
  }
  return m;
}

std::shared_ptr<const LieAlgebra> build_algebra(const RootSystem& rs, Field field) {
  return std::make_shared<const LieAlgebra>(rs, field);
}

FieldElement killing_form(const LieAlgebra& L, const GVector& u, const GVector& v) {
  FieldElement s(L.field());
  const int n = L.dimension();
  for (int i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      const std::int64_t k = L.killing_basis(i, j);
      if (k != 0 && !v[j].is_zero()) s += u[i] * v[j] * Rational(k);
    }
  }
  return s;
}

bool is_zero_vector(const GVector& u) {
  for (const auto& c : u) {
    if (!c.is_zero()) return false;
  }
  return true;
}

GVector scaled(const GVector& u, const FieldElement& c) {
  GVector r = u;
  for (auto& x : r) {
    if (!x.is_zero()) x *= c;
  }
  return r;
}

GVector add(const GVector& u, const GVector& v) {
  GVector r = u;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += v[i];
  return r;
}

GVector sub(const GVector& u, const GVector& v) {
  GVector r = u;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= v[i];
  return r;
}

namespace {

bool in_cartan(const LieAlgebra& L, const GVector& u) {
  for (int b = 0; b < 2 * L.num_positive(); ++b) {
    if (!u[b].is_zero()) return false;
  }
  return true;
}

}  // namespace

std::vector<GVector> weight_space(const LieAlgebra& L, const std::vector<GVector>& toral,
                                  const std::vector<FieldElement>& values) {
  for (std::size_t a = 0; a < toral.size(); ++a) {
    for (std::size_t b = a + 1; b < toral.size(); ++b) {
      if (!is_zero_vector(L.bracket(toral[a], toral[b]))) throw NotToral("toral elements do not commute");
    }
  }
  const int n = L.dimension();
  const bool cartan = std::all_of(toral.begin(), toral.end(), [&](const GVector& t) { return in_cartan(L, t); });
  if (cartan) {
    // Eigenvectors are root vectors and Cartan elements.
    std::vector<GVector> out;
    for (int b = 0; b < n; ++b) {
      bool ok = true;
      for (std::size_t k = 0; k < toral.size() && ok; ++k) {
        FieldElement val(L.field());
        if (L.root_of_basis(b) >= 0) {
          for (int i = 0; i < L.rank(); ++i) {
            const int w = L.weight_on_coroot(b, i);
            if (w != 0) val += toral[k][L.h_index(i)] * Rational(w);
          }
        }
        ok = val == values[k];
      }
      if (ok) out.push_back(L.basis_vector(b));
    }
    return out;
  }
  linalg::Mat<FieldElement> stacked;
  for (std::size_t k = 0; k < toral.size(); ++k) {
    auto m = L.ad_matrix(toral[k]);
    for (int i = 0; i < n; ++i) m[i][i] -= values[k];
    for (auto& row : m) stacked.push_back(std::move(row));
  }
  return linalg::nullspace(std::move(stacked), n, FieldElement(L.field()));
}

std::vector<GVector> centralizer(const LieAlgebra& L, const std::vector<GVector>& S) {
  const int n = L.dimension();
  if (S.empty()) {
    std::vector<GVector> all;
    for (int b = 0; b < n; ++b) all.push_back(L.basis_vector(b));
    return all;
  }
  linalg::Mat<FieldElement> stacked;
  for (const auto& s : S) {
    auto m = L.ad_matrix(s);
    for (auto& row : m) stacked.push_back(std::move(row));
  }
  return linalg::nullspace(std::move(stacked), n, FieldElement(L.field()));
}

Rational cartan_gram(const LieAlgebra& L, const GVector& a, const GVector& b) {
  const int l = L.rank();
  const auto& G = L.root_system().coroot_gram();
  Rational s = 0;
  for (int i = 0; i < l; ++i) {
    const FieldElement& ai = a[L.h_index(i)];
    if (ai.is_zero()) continue;
    if (!ai.is_rational()) throw NotInCartan("irrational Cartan coordinate");
    for (int j = 0; j < l; ++j) {
      const FieldElement& bj = b[L.h_index(j)];
      if (bj.is_zero()) continue;
      if (!bj.is_rational()) throw NotInCartan("irrational Cartan coordinate");
      s += ai.rational_part() * G[i][j] * bj.rational_part();
    }
  }
  return s;
}

std::vector<Rational> dynkin_index(const LieAlgebra& L, const CanonicalGenSet& sub) {
  const RootSystem model(sub.cartan);
  std::vector<Rational> out;
  for (const auto& comp : diagram_components(sub.cartan)) {
    const int i = comp.front();
    const Rational ambient = cartan_gram(L, sub.h[i], sub.h[i]);
    if (sgn(ambient) == 0) throw DegenerateRestriction("normalized form vanishes on a simple factor");
    out.push_back(ambient / model.coroot_gram()[i][i]);
  }
  return out;
}

std::vector<GVector> generated_subalgebra(const LieAlgebra& L, const std::vector<GVector>& gens, std::size_t cap) {
  linalg::EchelonBasis<FieldElement> basis(L.dimension());
  std::vector<GVector> found;
  for (const auto& g : gens) {
    if (basis.insert(g)) found.push_back(g);
  }
  for (std::size_t k = 0; k < found.size() && found.size() <= cap; ++k) {
    for (const auto& g : gens) {
      GVector w = L.bracket(g, found[k]);
      if (is_zero_vector(w)) continue;
      if (basis.insert(w)) {
        found.push_back(std::move(w));
        if (found.size() > cap) break;
      }
    }
  }
  return found;
}

std::string explain_canonical(const LieAlgebra& L, const CanonicalGenSet& gens, const CartanMatrix& cartan) {
  const std::size_t r = cartan.size();
  if (gens.h.size() != r || gens.x.size() != r || gens.y.size() != r) return "generator count mismatch";
  const auto n = static_cast<std::size_t>(L.dimension());
  for (std::size_t i = 0; i < r; ++i) {
    if (gens.h[i].size() != n || gens.x[i].size() != n || gens.y[i].size() != n) return "vector length mismatch";
  }
  int expected = 0;
  try {
    expected = identify(cartan).first.dimension();
  } catch (const Error& e) {
    return e.what();
  }
  auto bad = [](const char* what, std::size_t i, std::size_t j) {
    std::ostringstream os;
    os << what << " fails for (" << i + 1 << "," << j + 1 << ")";
    return os.str();
  };
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (j > i && !is_zero_vector(L.bracket(gens.h[i], gens.h[j]))) return bad("[h_i,h_j] = 0", i, j);
      GVector xy = L.bracket(gens.x[i], gens.y[j]);
      if (i == j) xy = sub(xy, gens.h[i]);
      if (!is_zero_vector(xy)) return bad("[x_i,y_j] = delta_ij h_i", i, j);
      const FieldElement c(L.field(), Rational(cartan[i][j]));
      if (!is_zero_vector(sub(L.bracket(gens.h[j], gens.x[i]), scaled(gens.x[i], c)))) {
        return bad("[h_j,x_i] = C(i,j) x_i", i, j);
      }
      if (!is_zero_vector(add(L.bracket(gens.h[j], gens.y[i]), scaled(gens.y[i], c)))) {
        return bad("[h_j,y_i] = -C(i,j) y_i", i, j);
      }
    }
  }
  std::vector<GVector> all;
  for (std::size_t i = 0; i < r; ++i) {
    all.push_back(gens.x[i]);
    all.push_back(gens.y[i]);
  }
  const auto span = generated_subalgebra(L, all, static_cast<std::size_t>(expected));
  if (static_cast<int>(span.size()) != expected) {
    return "generated dimension " + std::to_string(span.size()) + " != " + std::to_string(expected);
  }
  return {};
}

bool verify_canonical(const LieAlgebra& L, const CanonicalGenSet& gens, const CartanMatrix& cartan) {
  return explain_canonical(L, gens, cartan).empty();
}

CanonicalGenSet standard_generators(const LieAlgebra& L) {
  CanonicalGenSet g;
  g.cartan = L.root_system().cartan();
  for (int i = 0; i < L.rank(); ++i) {
    g.h.push_back(L.basis_vector(L.h_index(i)));
    g.x.push_back(L.basis_vector(L.x_index(i)));
    g.y.push_back(L.basis_vector(L.y_index(i)));
  }
  return g;
}

}  // namespace liesub
