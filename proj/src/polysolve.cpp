#include "liesub/polysolve.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

#include "liesub/upoly.hpp"

namespace liesub {

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::lex) return a < b;
  int da = 0;
  int db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(int nvars, Field field) : nvars_(nvars), field_(field) {}

MultiPoly MultiPoly::constant(int nvars, const FieldElement& c) {
  MultiPoly p(nvars, c.field());
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index, Field field) {
  MultiPoly p(nvars, field);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, FieldElement(field, Rational(1)));
  return p;
}

bool MultiPoly::is_unit() const {
  return terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                           [](int e) { return e == 0; });
}

void MultiPoly::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

const Monomial& MultiPoly::leading_monomial(MonomialOrder order) const {
  if (order == MonomialOrder::lex) return terms_.rbegin()->first;
  const Monomial* best = &terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    if (monomial_less(*best, m, order)) best = &m;
  }
  return *best;
}

const FieldElement& MultiPoly::leading_coefficient(MonomialOrder order) const {
  return terms_.at(leading_monomial(order));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a.nvars_, a.field_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(MultiPoly a, const FieldElement& c) {
  if (c.is_zero()) return MultiPoly(a.nvars_, a.field_);
  for (auto& [m, x] : a.terms_) x *= c;
  return a;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& point) const {
  FieldElement s(field_);
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    }
    s += t;
  }
  return s;
}

MultiPoly MultiPoly::substitute(int index, const FieldElement& c) const {
  MultiPoly r(nvars_, field_);
  for (const auto& [m, x] : terms_) {
    FieldElement t = x;
    for (int e = 0; e < m[index]; ++e) t *= c;
    Monomial m2 = m;
    m2[index] = 0;
    r.add_term(m2, t);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool constant = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    std::string coef;
    bool negative = false;
    if (c.is_rational()) {
      negative = sgn(c.rational_part()) < 0;
      coef = liesub::to_string(abs(c.rational_part()));
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (constant || coef != "1") {
      os << coef;
      need_star = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      os << (need_star ? "*" : "") << "x" << (i + 1) << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

// ------------------------------------------------------------ Buchberger

namespace {

struct Term {
  Monomial m;
  FieldElement c;
};

/// Terms sorted by decreasing monomial under the engine's order.
using TPoly = std::vector<Term>;

class Engine {
 public:
  Engine(int nvars, Field field, MonomialOrder order) : n_(nvars), field_(field), order_(order) {}

  TPoly from(const MultiPoly& p) const {
    TPoly t;
    for (const auto& [m, c] : p.terms()) t.push_back({m, c});
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return monomial_less(b.m, a.m, order_); });
    return t;
  }

  MultiPoly to(const TPoly& t) const {
    MultiPoly p(n_, field_);
    for (const auto& term : t) p.add_term(term.m, term.c);
    return p;
  }

  bool divides(const Monomial& a, const Monomial& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  }

  Monomial lcm(const Monomial& a, const Monomial& b) const {
    Monomial m(n_);
    for (int i = 0; i < n_; ++i) m[i] = std::max(a[i], b[i]);
    return m;
  }

  bool coprime(const Monomial& a, const Monomial& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] > 0 && b[i] > 0) return false;
    }
    return true;
  }

  void make_monic(TPoly& p) const {
    if (p.empty()) return;
    const FieldElement inv = p.front().c.inverse();
    for (auto& t : p) t.c *= inv;
  }

  /// p - c * q * g, all sorted.
  TPoly sub_mul(const TPoly& p, const FieldElement& c, const Monomial& q, const TPoly& g) const {
    TPoly out;
    out.reserve(p.size() + g.size());
    std::size_t i = 0;
    std::size_t j = 0;
    Monomial m(n_);
    while (i < p.size() || j < g.size()) {
      if (j < g.size()) {
        for (int k = 0; k < n_; ++k) m[k] = g[j].m[k] + q[k];
      }
      if (j == g.size() || (i < p.size() && monomial_less(m, p[i].m, order_))) {
        out.push_back(p[i++]);
      } else if (i == p.size() || monomial_less(p[i].m, m, order_)) {
        out.push_back({m, -(c * g[j].c)});
        ++j;
      } else {
        FieldElement v = p[i].c - c * g[j].c;
        if (!v.is_zero()) out.push_back({m, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  /// Full reduction by monic polynomials.
  TPoly reduce(TPoly p, const std::vector<const TPoly*>& basis) const {
    TPoly r;
    std::size_t head = 0;
    while (head < p.size()) {
      const Term& lt = p[head];
      const TPoly* div = nullptr;
      for (const TPoly* g : basis) {
        if (divides(g->front().m, lt.m)) {
          div = g;
          break;
        }
      }
      if (div == nullptr) {
        r.push_back(lt);
        ++head;
        continue;
      }
      Monomial q(n_);
      for (int k = 0; k < n_; ++k) q[k] = lt.m[k] - div->front().m[k];
      TPoly rest(p.begin() + static_cast<long>(head), p.end());
      p = sub_mul(rest, lt.c, q, *div);
      head = 0;
    }
    return r;
  }

  TPoly spoly(const TPoly& f, const TPoly& g) const {
    const Monomial l = lcm(f.front().m, g.front().m);
    Monomial qf(n_);
    Monomial qg(n_);
    for (int k = 0; k < n_; ++k) {
      qf[k] = l[k] - f.front().m[k];
      qg[k] = l[k] - g.front().m[k];
    }
    TPoly a;
    for (const auto& t : f) {
      Monomial m(n_);
      for (int k = 0; k < n_; ++k) m[k] = t.m[k] + qf[k];
      a.push_back({m, t.c});
    }
    return sub_mul(a, FieldElement(field_, Rational(1)), qg, g);
  }

  MonomialOrder order() const { return order_; }

 private:
  int n_;
  Field field_;
  MonomialOrder order_;
};

std::vector<const TPoly*> pointers(const std::vector<TPoly>& v, std::size_t skip = SIZE_MAX) {
  std::vector<const TPoly*> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != skip) out.push_back(&v[i]);
  }
  return out;
}

}  // namespace

GroebnerBasis groebner(const std::vector<MultiPoly>& gens, MonomialOrder order, std::size_t pair_budget) {
  GroebnerBasis out;
  out.order = order;
  if (gens.empty()) return out;
  const int n = gens.front().nvars();
  const Field field = gens.front().field();
  Engine eng(n, field, order);

  std::vector<TPoly> G;
  std::set<std::pair<int, int>> pending;
  auto unit = [&]() {
    out.generators = {MultiPoly::constant(n, FieldElement(field, Rational(1)))};
    return out;
  };
  auto is_constant = [&](const TPoly& p) {
    return std::all_of(p.front().m.begin(), p.front().m.end(), [](int e) { return e == 0; });
  };
  auto add = [&](TPoly p) {
    eng.make_monic(p);
    const int idx = static_cast<int>(G.size());
    G.push_back(std::move(p));
    for (int i = 0; i < idx; ++i) pending.insert({i, idx});
  };

  for (const auto& g : gens) {
    TPoly p = eng.reduce(eng.from(g), pointers(G));
    if (p.empty()) continue;
    if (is_constant(p)) return unit();
    add(std::move(p));
  }

  std::size_t processed = 0;
  while (!pending.empty()) {
    // Normal strategy: smallest lcm first.
    auto best = pending.begin();
    Monomial best_lcm = eng.lcm(G[best->first].front().m, G[best->second].front().m);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = eng.lcm(G[it->first].front().m, G[it->second].front().m);
      if (monomial_less(l, best_lcm, order)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);
    if (eng.coprime(G[i].front().m, G[j].front().m)) continue;
    bool chain = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!eng.divides(G[k].front().m, best_lcm)) continue;
      const auto ik = std::make_pair(std::min(i, k), std::max(i, k));
      const auto jk = std::make_pair(std::min(j, k), std::max(j, k));
      chain = pending.count(ik) == 0 && pending.count(jk) == 0;
    }
    if (chain) continue;
    if (++processed > pair_budget) throw BudgetExceeded("Groebner basis exceeded the S-pair budget");
    TPoly h = eng.reduce(eng.spoly(G[i], G[j]), pointers(G));
    if (h.empty()) continue;
    if (is_constant(h)) return unit();
    add(std::move(h));
  }

  // Minimal basis, then reduce every tail.
  std::vector<TPoly> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < G.size() && !drop; ++b) {
      if (a == b) continue;
      if (eng.divides(G[b].front().m, G[a].front().m)) drop = G[b].front().m != G[a].front().m || b < a;
    }
    if (!drop) minimal.push_back(G[a]);
  }
  std::vector<TPoly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    TPoly head{minimal[a].front()};
    TPoly tail(minimal[a].begin() + 1, minimal[a].end());
    TPoly r = eng.reduce(std::move(tail), pointers(minimal, a));
    head.insert(head.end(), r.begin(), r.end());
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const TPoly& a, const TPoly& b) { return monomial_less(b.front().m, a.front().m, order); });
  for (const auto& p : reduced) out.generators.push_back(eng.to(p));
  return out;
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) {
  if (gb.generators.empty()) return f;
  Engine eng(f.nvars(), f.field(), gb.order);
  std::vector<TPoly> G;
  for (const auto& g : gb.generators) {
    TPoly t = eng.from(g);
    eng.make_monic(t);
    G.push_back(std::move(t));
  }
  return eng.to(eng.reduce(eng.from(f), pointers(G)));
}

std::vector<int> independent_variables(const GroebnerBasis& gb) {
  if (gb.generators.empty()) return {};
  const int n = gb.generators.front().nvars();
  std::vector<Monomial> leads;
  for (const auto& g : gb.generators) leads.push_back(g.leading_monomial(gb.order));
  // A set S is independent when no leading monomial is supported inside S.
  auto independent = [&](const std::vector<bool>& in) {
    for (const auto& m : leads) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i) inside = m[i] == 0 || in[i];
      if (inside) return false;
    }
    return true;
  };
  std::vector<int> best;
  std::vector<bool> in(n, false);
  std::vector<int> cur;
  std::function<void(int)> search = [&](int k) {
    if (cur.size() + static_cast<std::size_t>(n - k) <= best.size()) return;
    if (k == n) {
      best = cur;
      return;
    }
    in[k] = true;
    if (independent(in)) {
      cur.push_back(k);
      search(k + 1);
      cur.pop_back();
    }
    in[k] = false;
    search(k + 1);
  };
  search(0);
  return best;
}

// ----------------------------------------------------------- root finding

std::optional<FieldElement> field_sqrt(const FieldElement& x) {
  const Field f = x.field();
  Rational r;
  if (x.is_rational() && upoly::rational_sqrt(x.rational_part(), r)) return FieldElement(f, r);
  if (f->degree() != 2) return std::nullopt;
  // Write F = Q(s) with s = t + c1/2, s^2 = delta, and x = p + q s.
  const auto& m = f->minimal_polynomial();
  const Rational c0 = m[0];
  const Rational c1 = m[1];
  const Rational delta = c1 * c1 / 4 - c0;
  const Rational a0 = x.coords()[0];
  const Rational a1 = x.coords()[1];
  const Rational p = a0 - a1 * c1 / 2;
  const Rational q = a1;
  auto from_s = [&](const Rational& u, const Rational& v) {
    // u + v s = (u + v c1/2) + v t
    return FieldElement(f, std::vector<Rational>{u + v * c1 / 2, v});
  };
  if (sgn(q) == 0) {
    if (upoly::rational_sqrt(p, r)) return from_s(r, 0);
    if (upoly::rational_sqrt(p / delta, r)) return from_s(0, r);
    return std::nullopt;
  }
  // (u + v s)^2 = p + q s gives delta v^4 - p v^2 + q^2/4 = 0.
  Rational d;
  if (!upoly::rational_sqrt(p * p - delta * q * q, d)) return std::nullopt;
  for (const Rational& v2 : {Rational((p + d) / (2 * delta)), Rational((p - d) / (2 * delta))}) {
    Rational v;
    if (sgn(v2) > 0 && upoly::rational_sqrt(v2, v)) return from_s(q / (2 * v), v);
  }
  return std::nullopt;
}

namespace {

using UPoly = upoly::Poly<FieldElement>;

struct RootSet {
  std::vector<FieldElement> roots;
  bool complete = true;
};

bool sqrt_is_decided(Field f) { return f->degree() <= 2; }

RootSet roots_in_field(UPoly p) {
  RootSet out;
  upoly::trim(p);
  if (p.size() <= 1) return out;
  // Squarefree part.
  const UPoly g = upoly::gcd(p, upoly::derivative(p));
  if (g.size() > 1) p = upoly::divmod(p, g).first;
  p = upoly::monic(p);
  const Field f = p.front().field();
  for (;;) {
    const int deg = upoly::degree(p);
    if (deg <= 0) break;
    if (deg == 1) {
      out.roots.push_back(-p[0]);
      break;
    }
    if (deg == 2) {
      const FieldElement disc = p[1] * p[1] - p[0] * Rational(4);
      if (auto s = field_sqrt(disc)) {
        const FieldElement half(f, Rational(1, 2));
        out.roots.push_back((-p[1] + *s) * half);
        if (!s->is_zero()) out.roots.push_back((-p[1] - *s) * half);
      } else if (!sqrt_is_decided(f)) {
        out.complete = false;
      }
      break;
    }
    const bool rational = std::all_of(p.begin(), p.end(), [](const FieldElement& c) { return c.is_rational(); });
    if (!rational) {
      out.complete = false;
      break;
    }
    upoly::Poly<Rational> q;
    for (const auto& c : p) q.push_back(c.rational_part());
    const auto rr = upoly::rational_roots(q);
    if (rr.empty()) {
      if (!f->is_rationals()) out.complete = false;
      break;
    }
    for (const auto& r : rr) {
      out.roots.emplace_back(f, r);
      p = upoly::divmod(p, UPoly{FieldElement(f, -r), FieldElement(f, Rational(1))}).first;
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

int top_variable(const MultiPoly& p) {
  int top = -1;
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < p.nvars(); ++i) {
      if (m[i] > 0) {
        if (top < 0 || i < top) top = i;
        break;
      }
    }
  }
  return top;
}

}  // namespace

SolveOutcome solve_zero_dim(const GroebnerBasis& gb_in) {
  SolveOutcome out;
  if (gb_in.generators.empty()) throw NotZeroDimensional("empty basis: every variable is free");
  if (gb_in.is_one()) return out;
  const GroebnerBasis gb = gb_in.order == MonomialOrder::lex ? gb_in : groebner(gb_in.generators);
  if (gb.is_one()) return out;
  const int n = gb.generators.front().nvars();
  const Field field = gb.generators.front().field();

  std::vector<std::string> free;
  for (int i = 0; i < n; ++i) {
    bool pure = false;
    for (const auto& g : gb.generators) {
      const auto& m = g.leading_monomial(MonomialOrder::lex);
      bool only_i = m[i] > 0;
      for (int k = 0; k < n && only_i; ++k) only_i = k == i || m[k] == 0;
      pure = pure || only_i;
    }
    if (!pure) free.push_back("x" + std::to_string(i + 1));
  }
  if (!free.empty()) {
    std::string names;
    for (const auto& v : free) names += (names.empty() ? "" : ", ") + v;
    throw NotZeroDimensional("free variables: " + names);
  }

  std::vector<std::vector<const MultiPoly*>> by_var(n);
  for (const auto& g : gb.generators) {
    const int v = top_variable(g);
    if (v >= 0) by_var[v].push_back(&g);
  }

  std::vector<FieldElement> point(n, FieldElement(field));
  std::function<void(int)> extend = [&](int k) {
    if (k < 0) {
      out.points.push_back(point);
      return;
    }
    UPoly common;
    for (const MultiPoly* g : by_var[k]) {
      MultiPoly s = *g;
      for (int v = k + 1; v < n; ++v) s = s.substitute(v, point[v]);
      if (s.is_zero()) continue;
      UPoly u;
      for (const auto& [m, c] : s.terms()) {
        if (static_cast<int>(u.size()) <= m[k]) u.resize(m[k] + 1, FieldElement(field));
        u[m[k]] += c;
      }
      common = common.empty() ? upoly::monic(u) : upoly::gcd(common, u);
    }
    if (common.empty()) throw NotZeroDimensional("fiber of x" + std::to_string(k + 1) + " is infinite");
    const RootSet rs = roots_in_field(common);
    if (!rs.complete) out.complete = false;
    for (const auto& r : rs.roots) {
      point[k] = r;
      extend(k - 1);
    }
  };
  extend(n - 1);

  if (out.points.empty()) {
    out.kind = SolveOutcome::Kind::needs_extension;
    out.complete = false;
    out.system = gb.generators;
  } else {
    out.kind = SolveOutcome::Kind::solutions;
    std::sort(out.points.begin(), out.points.end());
  }
  return out;
}

std::string format_system(const std::vector<MultiPoly>& polys) {
  std::string s;
  for (const auto& p : polys) s += p.to_string() + "\n";
  return s;
}

}  // namespace liesub
