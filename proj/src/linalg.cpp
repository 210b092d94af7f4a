#include "liesub/linalg.hpp"

namespace liesub::linalg {

Mat<Rational> inverse(const Mat<Rational>& m) {
  const std::size_t n = m.size();
  Mat<Rational> aug(n, Vec<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = rref(aug, n);
  if (pivots.size() != n || pivots.back() != n - 1) throw DivisionByZero("singular matrix");
  Mat<Rational> out(n, Vec<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  }
  return out;
}

}  // namespace liesub::linalg
