#include "liesub/nilpotent.hpp"

#include <algorithm>
#include <set>

namespace liesub {

namespace {

/// Coordinates where some vector of the family is nonzero.
std::vector<int> support(const std::vector<GVector>& vs) {
  std::set<int> s;
  for (const auto& v : vs) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) s.insert(static_cast<int>(i));
    }
  }
  return {s.begin(), s.end()};
}

GVector random_combination(const LieAlgebra& L, const std::vector<GVector>& basis, std::mt19937_64& rng) {
  for (;;) {
    GVector v = L.zero();
    bool any = false;
    for (const auto& b : basis) {
      const long c = static_cast<long>(rng() % 7) - 3;
      if (c == 0) continue;
      any = true;
      const FieldElement fc(L.field(), Rational(c));
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!b[i].is_zero()) v[i] += b[i] * fc;
      }
    }
    if (any) return v;
  }
}

bool spans_plus(const LieAlgebra& L, const GVector& e, const std::vector<GVector>& zero_part,
                const std::vector<GVector>& plus, const std::vector<int>& coords) {
  linalg::Mat<FieldElement> m;
  m.reserve(zero_part.size());
  for (const auto& z : zero_part) {
    const GVector b = L.bracket(z, e);
    std::vector<FieldElement> row;
    row.reserve(coords.size());
    for (int c : coords) row.push_back(b[c]);
    m.push_back(std::move(row));
  }
  return linalg::rank(std::move(m), coords.size()) == plus.size();
}

std::optional<GVector> solve_for_f(const LieAlgebra& L, const GVector& h, const GVector& e,
                                   const std::vector<GVector>& minus) {
  std::vector<GVector> cols;
  cols.reserve(minus.size());
  for (const auto& u : minus) cols.push_back(L.bracket(e, u));
  auto all = cols;
  all.push_back(h);
  const auto coords = support(all);
  const FieldElement zero(L.field());
  linalg::Mat<FieldElement> m;
  linalg::Vec<FieldElement> rhs;
  for (int c : coords) {
    std::vector<FieldElement> row;
    row.reserve(cols.size());
    for (const auto& col : cols) row.push_back(col[c]);
    m.push_back(std::move(row));
    rhs.push_back(h[c]);
  }
  const auto sol = linalg::solve(m, rhs, cols.size(), zero);
  if (!sol) return std::nullopt;
  GVector f = L.zero();
  for (std::size_t k = 0; k < minus.size(); ++k) {
    if ((*sol)[k].is_zero()) continue;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!minus[k][i].is_zero()) f[i] += minus[k][i] * (*sol)[k];
    }
  }
  return f;
}

}  // namespace

std::vector<int> graded_piece(const LieAlgebra& L, const std::vector<CartanElement>& hs,
                              const std::vector<Rational>& values) {
  const int l = L.rank();
  std::vector<int> out;
  for (int b = 0; b < 2 * L.num_positive(); ++b) {
    const RootVec& beta = L.basis_weight(b);
    bool ok = true;
    for (std::size_t k = 0; k < hs.size() && ok; ++k) {
      Rational v = 0;
      for (int i = 0; i < l; ++i) {
        if (beta[i] != 0) v += beta[i] * hs[k].labels[i];
      }
      ok = v == values[k];
    }
    if (ok) out.push_back(b);
  }
  if (std::all_of(values.begin(), values.end(), [](const Rational& v) { return sgn(v) == 0; })) {
    for (int i = 0; i < l; ++i) out.push_back(L.h_index(i));
  }
  return out;
}

DenseOrbitSearch find_sl2_in_pieces(const LieAlgebra& L, const GVector& h, const std::vector<GVector>& zero_part,
                                    const std::vector<GVector>& plus, const std::vector<GVector>& minus,
                                    std::mt19937_64& rng, int trials, bool fallback) {
  DenseOrbitSearch out;
  if (plus.empty() || minus.empty()) return out;
  const auto coords = support(plus);
  std::vector<GVector> tried;
  for (int t = 0; t < trials; ++t) {
    GVector e = random_combination(L, plus, rng);
    if (spans_plus(L, e, zero_part, plus, coords)) {
      out.dense_found = true;
      if (auto f = solve_for_f(L, h, e, minus)) out.triple = SL2Triple{h, std::move(e), std::move(*f)};
      return out;
    }
    tried.push_back(std::move(e));
  }
  if (fallback) {
    for (auto& e : tried) {
      if (auto f = solve_for_f(L, h, e, minus)) {
        out.triple = SL2Triple{h, std::move(e), std::move(*f)};
        return out;
      }
    }
  }
  return out;
}

std::optional<SL2Triple> admissible_test(const LieAlgebra& L, const CartanElement& h, std::uint64_t seed,
                                         int trials) {
  const auto basis_of = [&](const std::vector<int>& idx) {
    std::vector<GVector> v;
    v.reserve(idx.size());
    for (int b : idx) v.push_back(L.basis_vector(b));
    return v;
  };
  const auto zero = basis_of(graded_piece(L, {h}, {Rational(0)}));
  const auto plus = basis_of(graded_piece(L, {h}, {Rational(2)}));
  const auto minus = basis_of(graded_piece(L, {h}, {Rational(-2)}));
  std::mt19937_64 rng(seed);
  return find_sl2_in_pieces(L, L.cartan_vector(h), zero, plus, minus, rng, trials, true).triple;
}

std::vector<Characteristic> characteristics(const LieAlgebra& L, int label_bound) {
  const int l = L.rank();
  std::vector<Characteristic> out;
  std::vector<std::int64_t> labels(l, 0);
  for (;;) {
    int k = 0;
    while (k < l && labels[k] == label_bound) labels[k++] = 0;
    if (k == l) break;
    ++labels[k];
    CartanElement h;
    for (auto v : labels) h.labels.emplace_back(static_cast<long>(v));
    if (auto triple = admissible_test(L, h)) {
      out.push_back({h, orbit_size(L.root_system(), labels), std::move(*triple)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Characteristic& a, const Characteristic& b) {
    return a.labels.labels < b.labels.labels;
  });
  return out;
}

}  // namespace liesub
