#pragma once

// Dense univariate polynomials over an exact field. Coefficients are stored
// low-to-high; the zero polynomial is the empty vector.

#include <cstddef>
#include <utility>
#include <vector>

#include "liesub/errors.hpp"
#include "liesub/rational.hpp"

namespace liesub::upoly {

template <class S>
using Poly = std::vector<S>;

template <class S>
bool scalar_is_zero(const S& s) {
  return is_zero(s);
}

template <class S>
void trim(Poly<S>& p) {
  while (!p.empty() && scalar_is_zero(p.back())) p.pop_back();
}

template <class S>
int degree(const Poly<S>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class S>
Poly<S> sub(Poly<S> a, const Poly<S>& b) {
  if (a.size() < b.size()) a.resize(b.size(), zero_like(b.front()));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

template <class S>
Poly<S> mul(const Poly<S>& a, const Poly<S>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<S> r(a.size() + b.size() - 1, zero_like(a.front()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (scalar_is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

/// Returns (quotient, remainder). Divisor must be nonzero.
template <class S>
std::pair<Poly<S>, Poly<S>> divmod(Poly<S> a, const Poly<S>& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  const S zero = zero_like(b.back());
  Poly<S> q(a.size() - b.size() + 1, zero);
  const S lead_inv = inverse(b.back());
  for (std::size_t top = a.size(); top >= b.size(); --top) {
    const std::size_t k = top - 1;
    if (scalar_is_zero(a[k])) continue;
    S c = a[k] * lead_inv;
    const std::size_t shift = top - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

template <class S>
Poly<S> monic(Poly<S> p) {
  trim(p);
  if (p.empty()) return p;
  const S inv = inverse(p.back());
  for (auto& c : p) c *= inv;
  return p;
}

template <class S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

template <class S>
S eval(const Poly<S>& p, const S& x) {
  S r = zero_like(x);
  for (std::size_t k = p.size(); k-- > 0;) r = r * x + p[k];
  return r;
}

template <class S>
Poly<S> derivative(const Poly<S>& p) {
  if (p.size() <= 1) return {};
  Poly<S> d(p.size() - 1, zero_like(p.front()));
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * Rational(static_cast<long>(k));
  trim(d);
  return d;
}

}  // namespace liesub::upoly

namespace liesub::upoly {

/// All distinct rational roots, ascending. Divisor enumeration of the
/// constant and leading terms is capped; roots beyond the cap are missed,
/// never invented.
std::vector<Rational> rational_roots(Poly<Rational> p);

/// Exact square root in Q, if one exists.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace liesub::upoly
