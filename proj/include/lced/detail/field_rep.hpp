#ifndef LCED_DETAIL_FIELD_REP_HPP
#define LCED_DETAIL_FIELD_REP_HPP

#include <cstdint>
#include <vector>

#include "lced/errors.hpp"

namespace lced::detail {

// Interned field data. All element arithmetic bottoms out here, on packed
// codes sum(c_i * p^i). Instances live for the whole process.
struct FieldRep {
  std::uint64_t p = 0;
  unsigned m = 1;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;  // monic, length m+1; empty when m == 1

  // Dense op tables, built for small extension fields only.
  bool tabled = false;
  std::vector<std::uint32_t> add_tab;  // q*q
  std::vector<std::uint32_t> mul_tab;  // q*q
  std::vector<std::uint32_t> neg_tab;  // q
  std::vector<std::uint32_t> inv_tab;  // q; inv_tab[0] unused

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (m == 1) {
      std::uint64_t s = a + b;
      return s >= p ? s - p : s;
    }
    if (tabled) return add_tab[a * q + b];
    return add_slow(a, b);
  }

  std::uint64_t neg(std::uint64_t a) const {
    if (m == 1) return a == 0 ? 0 : p - a;
    if (tabled) return neg_tab[a];
    return neg_slow(a);
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (m == 1) return (a * b) % p;
    if (tabled) return mul_tab[a * q + b];
    return mul_slow(a, b);
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw DivisionByZeroError();
    if (m == 1) return inv_prime(a);
    if (tabled) return inv_tab[a];
    return inv_slow(a);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1, b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t add_slow(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_slow(std::uint64_t a) const;
  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv_slow(std::uint64_t a) const;
  std::uint64_t inv_prime(std::uint64_t a) const;

  void unpack(std::uint64_t code, std::uint64_t* digits) const;
  std::uint64_t pack(const std::uint64_t* digits) const;
};

}  // namespace lced::detail

#endif
