#include "liesub/subconstruct.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace liesub {

namespace {

std::vector<GVector> basis_vectors(const LieAlgebra& L, const std::vector<int>& idx) {
  std::vector<GVector> out;
  out.reserve(idx.size());
  for (int b : idx) out.push_back(L.basis_vector(b));
  return out;
}

GVector combine(const LieAlgebra& L, const std::vector<GVector>& basis, const std::vector<FieldElement>& coeffs) {
  GVector v = L.zero();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!basis[k][i].is_zero()) v[i] += basis[k][i] * coeffs[k];
    }
  }
  return v;
}

/// { u in span(basis indices) : [u, z] = 0 for every z in killers }.
std::vector<GVector> restricted_space(const LieAlgebra& L, const std::vector<int>& idx,
                                      const std::vector<GVector>& killers) {
  const auto basis = basis_vectors(L, idx);
  if (killers.empty() || basis.empty()) return basis;
  std::vector<std::vector<GVector>> images(basis.size());
  std::set<int> coords;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& z : killers) {
      images[j].push_back(L.bracket(basis[j], z));
      for (int c = 0; c < L.dimension(); ++c) {
        if (!images[j].back()[c].is_zero()) coords.insert(c);
      }
    }
  }
  linalg::Mat<FieldElement> m;
  for (std::size_t k = 0; k < killers.size(); ++k) {
    for (int c : coords) {
      std::vector<FieldElement> row;
      for (std::size_t j = 0; j < basis.size(); ++j) row.push_back(images[j][k][c]);
      m.push_back(std::move(row));
    }
  }
  std::vector<GVector> out;
  for (const auto& v : linalg::nullspace(std::move(m), basis.size(), FieldElement(L.field()))) {
    out.push_back(combine(L, basis, v));
  }
  return out;
}

std::vector<Rational> negated(const std::vector<Rational>& v) {
  std::vector<Rational> r;
  for (const auto& x : v) r.push_back(-x);
  return r;
}

std::vector<Rational> cartan_row(const CartanMatrix& c, int i) {
  std::vector<Rational> r;
  for (int v : c[i]) r.emplace_back(v);
  return r;
}

CanonicalGenSet assemble(const LieAlgebra& L, const std::vector<CartanElement>& hpart, const CartanMatrix& cartan,
                         const PartialGens& gens) {
  CanonicalGenSet out;
  for (const auto& h : hpart) out.h.push_back(L.cartan_vector(h));
  out.x = gens.x;
  out.y = gens.y;
  out.cartan = cartan;
  return out;
}

std::string cartan_string(const CartanMatrix& c) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < c[i].size(); ++j) os << (j ? "," : "") << c[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

std::vector<std::vector<Rational>> functionals(const RootSystem& rs, const CartanMatrix& cartan,
                                               const std::vector<CartanElement>& hpart) {
  linalg::Mat<Rational> m;
  for (const auto& h : hpart) m.push_back(h.labels);
  if (linalg::rank(m, rs.rank()) != hpart.size()) throw DegenerateHPart("h-part is linearly dependent");
  std::vector<std::vector<Rational>> mu;
  for (std::size_t i = 0; i < cartan.size(); ++i) mu.push_back(cartan_row(cartan, static_cast<int>(i)));
  return mu;
}

std::optional<SL2Triple> step_one(const LieAlgebra& L, const std::vector<CartanElement>& hpart,
                                  const std::vector<Rational>& mu1, std::mt19937_64& rng, int trials) {
  const std::vector<Rational> zeros(hpart.size(), Rational(0));
  const auto g0 = basis_vectors(L, graded_piece(L, hpart, zeros));
  const auto plus = basis_vectors(L, graded_piece(L, hpart, mu1));
  const auto minus = basis_vectors(L, graded_piece(L, hpart, negated(mu1)));
  return find_sl2_in_pieces(L, L.cartan_vector(hpart[0]), g0, plus, minus, rng, trials, true).triple;
}

std::optional<PartialGens> linear_method_step(const LieAlgebra& L, const std::vector<CartanElement>& hpart,
                                              const CartanMatrix& cartan, const PartialGens& state,
                                              std::mt19937_64& rng, int trials) {
  const int k = state.size();
  const auto mu = cartan_row(cartan, k);
  const std::vector<Rational> zeros(hpart.size(), Rational(0));
  const auto plus = restricted_space(L, graded_piece(L, hpart, mu), state.y);
  const auto minus = restricted_space(L, graded_piece(L, hpart, negated(mu)), state.x);
  if (plus.empty() || minus.empty()) return std::nullopt;
  const auto g0 = restricted_space(L, graded_piece(L, hpart, zeros), state.x);
  const auto res = find_sl2_in_pieces(L, L.cartan_vector(hpart[k]), g0, plus, minus, rng, trials, false);
  if (!res.dense_found || !res.triple) return std::nullopt;
  PartialGens next = state;
  next.x.push_back(res.triple->e);
  next.y.push_back(res.triple->f);
  return next;
}

ConstructOutcome polynomial_method(const LieAlgebra& L, const std::vector<CartanElement>& hpart,
                                   const CartanMatrix& cartan, const PartialGens& state, std::mt19937_64& rng,
                                   const ConstructOptions& options) {
  const int r = static_cast<int>(hpart.size());
  const int s = state.size();
  const Field field = L.field();
  ConstructOutcome out;
  out.polynomial_from = s;

  std::vector<std::vector<GVector>> P(r);
  std::vector<std::vector<GVector>> M(r);
  std::vector<int> xoff(r, 0);
  std::vector<int> yoff(r, 0);
  int nvars = 0;
  for (int k = s; k < r; ++k) {
    const auto mu = cartan_row(cartan, k);
    P[k] = restricted_space(L, graded_piece(L, hpart, mu), state.y);
    M[k] = restricted_space(L, graded_piece(L, hpart, negated(mu)), state.x);
    if (P[k].empty() || M[k].empty()) {
      out.certificate = "index " + std::to_string(k + 1) + ": empty root space";
      return out;
    }
  }
  for (int k = s; k < r; ++k) {
    xoff[k] = nvars;
    nvars += static_cast<int>(P[k].size());
  }
  for (int k = s; k < r; ++k) {
    yoff[k] = nvars;
    nvars += static_cast<int>(M[k].size());
  }

  // [x_k, y_m] = delta_km h_k, bilinear in the unknown coefficients.
  std::vector<MultiPoly> eqs;
  for (int k = s; k < r; ++k) {
    const GVector hk = L.cartan_vector(hpart[k]);
    for (int m = s; m < r; ++m) {
      std::vector<MultiPoly> coord(L.dimension(), MultiPoly(nvars, field));
      for (std::size_t j = 0; j < P[k].size(); ++j) {
        for (std::size_t jj = 0; jj < M[m].size(); ++jj) {
          const GVector b = L.bracket(P[k][j], M[m][jj]);
          Monomial mono(nvars, 0);
          mono[xoff[k] + j] = 1;
          mono[yoff[m] + jj] = 1;
          for (int c = 0; c < L.dimension(); ++c) {
            if (!b[c].is_zero()) coord[c].add_term(mono, b[c]);
          }
        }
      }
      if (k == m) {
        for (int c = 0; c < L.dimension(); ++c) {
          if (!hk[c].is_zero()) coord[c].add_term(Monomial(nvars, 0), -hk[c]);
        }
      }
      for (auto& p : coord) {
        if (!p.is_zero()) eqs.push_back(std::move(p));
      }
    }
  }

  auto finish = [&](const std::vector<FieldElement>& point) {
    PartialGens gens = state;
    for (int k = s; k < r; ++k) {
      std::vector<FieldElement> a(point.begin() + xoff[k], point.begin() + xoff[k] + P[k].size());
      std::vector<FieldElement> b(point.begin() + yoff[k], point.begin() + yoff[k] + M[k].size());
      gens.x.push_back(combine(L, P[k], a));
      gens.y.push_back(combine(L, M[k], b));
    }
    out.kind = ConstructOutcome::Kind::found;
    out.gens = assemble(L, hpart, cartan, gens);
    return out;
  };

  if (eqs.empty()) throw Error("polynomial method produced no equations");
  const GroebnerBasis gb = groebner(eqs, MonomialOrder::grevlex, options.pair_budget);
  if (gb.is_one()) {
    out.certificate = "polynomial system from index " + std::to_string(s + 1) + " has Groebner basis {1}";
    return out;
  }
  const auto free = independent_variables(gb);
  std::optional<GroebnerBasis> unsolved;
  for (int attempt = 0; attempt < std::max(1, options.specializations); ++attempt) {
    std::vector<MultiPoly> sys = gb.generators;
    for (int v : free) {
      const long val = attempt < 2 ? attempt : static_cast<long>(rng() % 7) - 3;
      sys.push_back(MultiPoly::variable(nvars, v, field) - MultiPoly::constant(nvars, FieldElement(field, Rational(val))));
    }
    const GroebnerBasis lex = groebner(sys, MonomialOrder::lex, options.pair_budget);
    if (lex.is_one()) continue;
    SolveOutcome sol;
    try {
      sol = solve_zero_dim(lex);
    } catch (const NotZeroDimensional&) {
      continue;
    }
    if (sol.kind == SolveOutcome::Kind::solutions) return finish(sol.points.front());
    if (sol.kind == SolveOutcome::Kind::needs_extension) unsolved = lex;
    if (free.empty()) break;
  }
  out.kind = ConstructOutcome::Kind::needs_operator;
  out.system = unsolved ? unsolved->generators : gb.generators;
  return out;
}

namespace {

ConstructOutcome construct_once(const LieAlgebra& L, const CartanMatrix& cartan,
                                const std::vector<CartanElement>& hpart, const ConstructOptions& options,
                                std::uint64_t seed) {
  const auto mu = functionals(L.root_system(), cartan, hpart);
  std::mt19937_64 rng(seed);
  ConstructOutcome out;
  const auto first = step_one(L, hpart, mu[0], rng, options.trials);
  if (!first) {
    out.certificate = "index 1: no sl2-triple in the graded piece";
    return out;
  }
  PartialGens state;
  state.x.push_back(first->e);
  state.y.push_back(first->f);
  const int r = static_cast<int>(hpart.size());
  while (state.size() < r) {
    auto next = linear_method_step(L, hpart, cartan, state, rng, options.trials);
    if (!next) break;
    state = std::move(*next);
  }
  if (state.size() < r) {
    out = polynomial_method(L, hpart, cartan, state, rng, options);
  } else {
    out.kind = ConstructOutcome::Kind::found;
    out.gens = assemble(L, hpart, cartan, state);
  }
  if (out.kind == ConstructOutcome::Kind::found) {
    const std::string why = explain_canonical(L, out.gens, cartan);
    if (!why.empty()) throw Error("constructed generators fail verification: " + why);
  }
  return out;
}

}  // namespace

ConstructOutcome construct(const LieAlgebra& L, const CartanMatrix& cartan, const std::vector<CartanElement>& hpart,
                           const ConstructOptions& options) {
  // Random linear steps can leave a partial set with no completion over the
  // active field; other choices may have one.
  ConstructOutcome out;
  for (int attempt = 0; attempt < std::max(1, options.restarts); ++attempt) {
    out = construct_once(L, cartan, hpart, options, options.seed + 0x9e3779b97f4a7c15ULL * attempt);
    if (out.kind != ConstructOutcome::Kind::needs_operator) break;
  }
  return out;
}

std::string needs_operator_artifact(const std::string& ambient, const CartanMatrix& cartan,
                                    const std::vector<CartanElement>& hpart, const std::vector<MultiPoly>& system) {
  std::ostringstream os;
  os << "ambient=" << ambient << "\n";
  os << "target=" << cartan_string(cartan) << "\n";
  os << "hpart=[";
  for (std::size_t i = 0; i < hpart.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < hpart[i].labels.size(); ++j) os << (j ? "," : "") << to_string(hpart[i].labels[j]);
    os << "]";
  }
  os << "]\n";
  os << format_system(system);
  return os.str();
}

}  // namespace liesub
