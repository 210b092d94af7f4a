#include "liesub/field.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "liesub/upoly.hpp"

namespace liesub {

FieldSpec::FieldSpec(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  const int d = degree();
  // t^d = -(c_0 + ... + c_{d-1} t^{d-1})
  std::vector<Rational> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = -coefficients_[i];
  for (int k = 0; k + 1 < d; ++k) {
    high_powers_.push_back(cur);
    std::vector<Rational> next(d);
    const Rational top = cur[d - 1];
    for (int i = d - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (int i = 0; i < d; ++i) next[i] -= top * coefficients_[i];
    cur = std::move(next);
  }
}

const FieldSpec* FieldSpec::rationals() {
  static const FieldSpec* q = intern({Rational(0), Rational(1)});
  return q;
}

const FieldSpec* FieldSpec::intern(const std::vector<Rational>& coefficients) {
  std::vector<Rational> c = coefficients;
  upoly::trim(c);
  if (c.size() < 2) throw InvalidType("minimal polynomial must have degree >= 1");
  if (c.back() != 1) throw InvalidType("minimal polynomial must be monic");
  if (c.size() == 2) c = {Rational(0), Rational(1)};
  static std::mutex mu;
  static std::map<std::vector<Rational>, std::unique_ptr<FieldSpec>> table;
  std::lock_guard lock(mu);
  auto& slot = table[c];
  if (!slot) slot = std::make_unique<FieldSpec>(c);
  return slot.get();
}

bool FieldSpec::passes_rational_root_test() const {
  if (degree() == 1) return true;
  return upoly::rational_roots(coefficients_).empty();
}

std::string FieldSpec::to_string() const {
  if (is_rationals()) return "Q";
  std::ostringstream os;
  os << "Q[t]/(";
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coefficients_[k];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    Rational a = abs(c);
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0) os << (k == 0 || a != 1 ? "*" : "") << "t" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  os << ")";
  return os.str();
}

FieldElement::FieldElement(Field field) : field_(field), coords_(field->degree()) {}

FieldElement::FieldElement(Field field, const Rational& value) : field_(field), coords_(field->degree()) {
  coords_[0] = value;
}

FieldElement::FieldElement(Field field, std::vector<Rational> coords) : field_(field), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_->degree()) {
    throw FieldMismatch("coordinate count does not match field degree");
  }
}

FieldElement FieldElement::generator(Field field) {
  FieldElement g(field);
  if (field->degree() == 1) {
    g.coords_[0] = -field->minimal_polynomial()[0];
  } else {
    g.coords_[1] = 1;
  }
  return g;
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) != 0) return false;
  }
  return true;
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_ != o.field_) throw FieldMismatch(field_->to_string() + " vs " + o.field_->to_string());
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& q) {
  for (auto& c : coords_) c *= q;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  const int d = field_->degree();
  if (d == 1) {
    coords_[0] *= o.coords_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (sgn(coords_[i]) == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] += coords_[i] * o.coords_[j];
  }
  const auto& hp = field_->high_powers();
  for (int k = 0; k + 1 < d; ++k) {
    const Rational& c = prod[d + k];
    if (sgn(c) == 0) continue;
    for (int i = 0; i < d; ++i) prod[i] += c * hp[k][i];
  }
  prod.resize(d);
  coords_ = std::move(prod);
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field_->to_string());
  if (field_->degree() == 1) return FieldElement(field_, Rational(1) / coords_[0]);
  // Extended Euclid: find u with u*a = 1 mod m.
  using upoly::Poly;
  Poly<Rational> r0 = field_->minimal_polynomial();
  Poly<Rational> r1 = coords_;
  upoly::trim(r1);
  Poly<Rational> s0, s1{Rational(1)};
  while (upoly::degree(r1) > 0) {
    auto [q, r] = upoly::divmod(r0, r1);
    Poly<Rational> s2 = upoly::sub(s0, upoly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw DivisionByZero("zero divisor: minimal polynomial is reducible");
  const Rational c = r1[0];
  std::vector<Rational> out(field_->degree());
  for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] / c;
  return FieldElement(field_, std::move(out));
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.coords_ == b.coords_;
}

bool operator<(const FieldElement& a, const FieldElement& b) { return a.coords_ < b.coords_; }

std::string FieldElement::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const Rational& c = coords_[k];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    const Rational a = abs(c);
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw Error("unknown arithmetic op");
}

FieldElement field_embed(const FieldElement& x, Field from, Field into, const FieldElement& image_of_generator) {
  if (x.field() != from) throw FieldMismatch("element is not in the source field");
  if (image_of_generator.field() != into) throw FieldMismatch("generator image is not in the target field");
  // m_from(image) must vanish.
  FieldElement acc(into);
  FieldElement power(into, Rational(1));
  const auto& m = from->minimal_polynomial();
  for (std::size_t k = 0; k < m.size(); ++k) {
    acc += power * m[k];
    power *= image_of_generator;
  }
  if (!acc.is_zero()) throw NotAnEmbedding("image does not satisfy " + from->to_string());
  if (from->is_rationals()) return FieldElement(into, x.rational_part());
  FieldElement out(into);
  FieldElement p(into, Rational(1));
  for (const auto& c : x.coords()) {
    out += p * c;
    p *= image_of_generator;
  }
  return out;
}

Field parse_field(const std::string& text) {
  std::vector<Rational> coeffs;
  std::string cur;
  for (char c : text + ",") {
    if (c == ' ' || c == '\t') continue;
    if (c == ',') {
      if (!cur.empty()) coeffs.push_back(parse_rational(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (coeffs.empty()) return FieldSpec::rationals();
  return FieldSpec::intern(coeffs);
}

}  // namespace liesub
