#ifndef LCED_FIELD_HPP
#define LCED_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lced/errors.hpp"

namespace lced {

class Field;
class FieldElement;

namespace detail {
struct FieldRep;
// Internal accessor for packed-code arithmetic paths.
const FieldRep* rep_of(Field f);
}  // namespace detail

// Handle to an interned finite field F_{p^m}. Copying is cheap; two handles
// compare equal iff they denote the same (p, m, modulus) triple.
class Field {
 public:
  // Prime field F_p. Throws NonPrimeError.
  static Field prime(std::uint64_t p);

  // Extension field F_{p^m} with a monic irreducible modulus of degree m,
  // coefficients low-to-high (length m+1). Throws NonPrimeError,
  // MissingModulusError, ReducibleModulusError.
  static Field extension(std::uint64_t p, unsigned m,
                         const std::vector<std::int64_t>& modulus);

  // Parses "p" or "p^m:c0,c1,...,cm".
  static Field parse(std::string_view literal);

  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;

  FieldElement zero() const;
  FieldElement one() const;

  // Image of the integer n under Z -> F_p -> F_{p^m}.
  FieldElement element(std::int64_t n) const;

  // Element with the given coordinate vector over F_p (low-to-high, at most
  // m entries, reduced mod p).
  FieldElement from_coeffs(const std::vector<std::int64_t>& coeffs) const;

  // Element number i in enumeration order; i < order(). Enumeration order is
  // by packed code sum(c_i * p^i), so prime subfield constants come first.
  FieldElement from_index(std::uint64_t i) const;

  std::string literal() const;

  bool operator==(const Field& o) const { return rep_ == o.rep_; }
  bool operator!=(const Field& o) const { return rep_ != o.rep_; }

 private:
  friend class FieldElement;
  friend const detail::FieldRep* detail::rep_of(Field);
  explicit Field(const detail::FieldRep* rep) : rep_(rep) {}
  const detail::FieldRep* rep_;
};

class FieldElement {
 public:
  // Detached element; any arithmetic on it throws MixedFieldsError.
  FieldElement() : rep_(nullptr), code_(0) {}

  Field field() const;
  bool is_zero() const { return code_ == 0; }
  bool is_one() const;

  // Position in the field's enumeration order.
  std::uint64_t index() const { return code_; }

  // Coordinates over F_p, low-to-high, exactly degree() entries.
  std::vector<std::uint64_t> coeffs() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;  // DivisionByZeroError
  FieldElement operator-() const;
  FieldElement inv() const;  // DivisionByZeroError
  FieldElement pow(std::uint64_t e) const;

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Prints prime-field elements as "c" and extension elements as "c0:c1:...".
  std::string str() const;

 private:
  friend class Field;
  friend struct detail::FieldRep;
  FieldElement(const detail::FieldRep* rep, std::uint64_t code)
      : rep_(rep), code_(code) {}
  const detail::FieldRep* check(const FieldElement& o) const;
  const detail::FieldRep* rep_;
  std::uint64_t code_;
};

enum class QuadraticCharacter { zero, square, nonsquare };

// Euler criterion; in characteristic 2 every element is a square.
QuadraticCharacter quadratic_character(const FieldElement& a);

}  // namespace lced

#endif
