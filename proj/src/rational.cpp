#include "liesub/rational.hpp"

#include "liesub/errors.hpp"

namespace liesub {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw FormatError("empty rational");
  for (char c : text) {
    if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9'))) {
      throw FormatError("bad rational '" + std::string(text) + "'");
    }
  }
  std::string s(text);
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) throw FormatError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw FormatError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw std::overflow_error("rational " + q.get_str() + " is not a 64-bit integer");
  }
  return q.get_num().get_si();
}

Integer common_denominator(const std::vector<Rational>& v) {
  Integer d = 1;
  for (const auto& q : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  return d;
}

}  // namespace liesub
