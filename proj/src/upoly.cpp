#include "liesub/upoly.hpp"

#include <algorithm>
#include <set>

namespace liesub::upoly {
namespace {

constexpr unsigned long kTrialLimit = 2'000'000;

// Positive divisors of |n| (n != 0). Large cofactors left after trial
// division are treated as prime.
std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, int>> factors;
  for (unsigned long p = 2; p <= kTrialLimit; ++p) {
    Integer pp = p;
    if (pp * pp > n) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(pp, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > 200000) break;
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(Poly<Rational> p) {
  trim(p);
  std::set<Rational> roots;
  if (p.size() <= 1) return {};
  // Strip the factor t^k.
  std::size_t low = 0;
  while (low < p.size() && is_zero(p[low])) ++low;
  if (low > 0) {
    roots.insert(Rational(0));
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
  }
  if (p.size() > 1) {
    Integer den = common_denominator(p);
    std::vector<Integer> ints;
    ints.reserve(p.size());
    for (const auto& c : p) ints.push_back(Integer(c * den));
    const auto num_divs = divisors(ints.front());
    const auto den_divs = divisors(ints.back());
    for (const auto& a : num_divs) {
      for (const auto& b : den_divs) {
        for (int sign : {1, -1}) {
          Rational cand(a * sign, b);
          cand.canonicalize();
          if (roots.count(cand) != 0) continue;
          if (is_zero(eval(p, cand))) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (sgn(q) == 0) {
    root = 0;
    return true;
  }
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return false;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

}  // namespace liesub::upoly
