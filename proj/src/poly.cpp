#include "lced/poly.hpp"

#include <sstream>

namespace lced {

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::from_coeffs(Field f, const std::vector<std::int64_t>& coeffs) {
  Polynomial r(f);
  r.c_.reserve(coeffs.size());
  for (auto c : coeffs) r.c_.push_back(f.element(c));
  r.trim();
  return r;
}

Polynomial Polynomial::from_elements(Field f, std::vector<FieldElement> coeffs) {
  Polynomial r(f);
  for (const auto& c : coeffs)
    if (c.field() != f) throw MixedFieldsError();
  r.c_ = std::move(coeffs);
  r.trim();
  return r;
}

Polynomial Polynomial::monomial(Field f, std::size_t deg, FieldElement c) {
  Polynomial r(f);
  if (c.field() != f) throw MixedFieldsError();
  if (!c.is_zero()) {
    r.c_.assign(deg + 1, f.zero());
    r.c_[deg] = c;
  }
  return r;
}

FieldElement Polynomial::leading() const {
  return c_.empty() ? field_.zero() : c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (field_ != o.field_) throw MixedFieldsError();
  Polynomial r(field_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
  r.trim();
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (field_ != o.field_) throw MixedFieldsError();
  Polynomial r(field_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) - o.coeff(i);
  r.trim();
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (field_ != o.field_) throw MixedFieldsError();
  Polynomial r(field_);
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (field_ != o.field_) throw MixedFieldsError();
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (field_ != d.field_) throw MixedFieldsError();
  if (d.is_zero()) throw DivisionByZeroError();
  Polynomial q(field_), r = *this;
  if (r.c_.size() < d.c_.size()) return {q, r};
  q.c_.assign(r.c_.size() - d.c_.size() + 1, field_.zero());
  FieldElement li = d.leading().inv();
  while (r.c_.size() >= d.c_.size()) {
    FieldElement c = r.c_.back() * li;
    std::size_t shift = r.c_.size() - d.c_.size();
    q.c_[shift] = c;
    for (std::size_t i = 0; i + 1 < d.c_.size(); ++i)
      r.c_[shift + i] -= c * d.c_[i];
    r.c_.pop_back();
    r.trim();
    if (r.c_.empty()) break;
  }
  q.trim();
  return {q, r};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r(field_);
  FieldElement li = leading().inv();
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c * li);
  return r;
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  FieldElement acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Polynomial Polynomial::reciprocal() const {
  Polynomial r(field_);
  r.c_.assign(c_.rbegin(), c_.rend());
  r.trim();
  return r;
}

std::string Polynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].str();
  }
  return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace lced
