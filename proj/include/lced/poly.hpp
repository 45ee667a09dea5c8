#ifndef LCED_POLY_HPP
#define LCED_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lced/field.hpp"

namespace lced {

// Univariate polynomial over a finite field. Coefficients are stored
// low-to-high with no trailing zeros; the zero polynomial has none.
class Polynomial {
 public:
  explicit Polynomial(Field f) : field_(f) {}

  static Polynomial from_coeffs(Field f, const std::vector<std::int64_t>& coeffs);
  static Polynomial from_elements(Field f, std::vector<FieldElement> coeffs);
  static Polynomial monomial(Field f, std::size_t deg, FieldElement c);
  static Polynomial monomial(Field f, std::size_t deg) {
    return monomial(f, deg, f.one());
  }

  Field field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  // Zero beyond the degree.
  FieldElement coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : field_.zero();
  }
  FieldElement leading() const;
  const std::vector<FieldElement>& coeffs() const { return c_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

  Polynomial monic() const;
  FieldElement eval(const FieldElement& x) const;

  // x^deg * p(1/x): the coefficient vector reversed, then trimmed.
  Polynomial reciprocal() const;

  // Comma-separated coefficients low-to-high, e.g. "1,0,1"; zero is "0".
  std::string str() const;

 private:
  void trim();
  Field field_;
  std::vector<FieldElement> c_;
};

// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

}  // namespace lced

#endif
