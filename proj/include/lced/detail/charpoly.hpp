#ifndef LCED_DETAIL_CHARPOLY_HPP
#define LCED_DETAIL_CHARPOLY_HPP

#include <cstddef>
#include <vector>

#include "lced/detail/field_rep.hpp"

namespace lced::detail {

// Characteristic polynomial by fraction-free elimination on xI - M.
//
// Every Bareiss pivot here is a leading principal minor of xI - M, which is
// monic and never vanishes, so no pivot search happens and every exact
// division is by a monic polynomial. Division by a monic divisor uses no
// scalar inverses, which keeps the routine valid over the integers as well
// as over a field.
//
// Ops requirements:
//   using S = scalar;
//   S zero(), one(); S add(S,S), sub(S,S), mul(S,S), neg(S); bool is_zero(S).
template <class Ops>
class CharPolyEngine {
 public:
  explicit CharPolyEngine(Ops ops) : ops_(ops) {}

  // m: k*k scalars row-major. out: k+1 coefficients of det(xI - M),
  // low-to-high; out[k] = 1.
  void run(const typename Ops::S* m, std::size_t k, typename Ops::S* out) {
    using S = typename Ops::S;
    if (k == 0) {
      out[0] = ops_.one();
      return;
    }
    const std::size_t stride = k + 1;
    pool_.assign(k * k * stride, ops_.zero());
    len_.assign(k * k, 0);
    auto at = [&](std::size_t i, std::size_t j) -> S* {
      return pool_.data() + (i * k + j) * stride;
    };
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        S* e = at(i, j);
        S v = ops_.neg(m[i * k + j]);
        if (i == j) {
          e[0] = v;
          e[1] = ops_.one();
          len_[i * k + j] = 2;
        } else if (!ops_.is_zero(v)) {
          e[0] = v;
          len_[i * k + j] = 1;
        }
      }

    t1_.assign(2 * k + 2, ops_.zero());
    t2_.assign(2 * k + 2, ops_.zero());
    prev_.assign(stride, ops_.zero());
    prev_[0] = ops_.one();
    std::size_t prev_len = 1;

    for (std::size_t l = 0; l + 1 < k; ++l) {
      const S* piv = at(l, l);
      const std::size_t piv_len = len_[l * k + l];
      for (std::size_t i = l + 1; i < k; ++i)
        for (std::size_t j = l + 1; j < k; ++j) {
          std::size_t n1 = mul_into(t1_.data(), at(i, j), len_[i * k + j], piv, piv_len);
          std::size_t n2 =
              mul_into(t2_.data(), at(i, l), len_[i * k + l], at(l, j), len_[l * k + j]);
          std::size_t nt = sub_into(t1_.data(), n1, t2_.data(), n2);
          len_[i * k + j] = div_monic(t1_.data(), nt, prev_.data(), prev_len, at(i, j));
        }
      for (std::size_t t = 0; t < piv_len; ++t) prev_[t] = piv[t];
      prev_len = piv_len;
    }

    const S* last = at(k - 1, k - 1);
    for (std::size_t i = 0; i <= k; ++i)
      out[i] = i < len_[(k - 1) * k + (k - 1)] ? last[i] : ops_.zero();
  }

 private:
  using S = typename Ops::S;

  std::size_t mul_into(S* out, const S* a, std::size_t la, const S* b, std::size_t lb) {
    if (la == 0 || lb == 0) return 0;
    const std::size_t lo = la + lb - 1;
    for (std::size_t i = 0; i < lo; ++i) out[i] = ops_.zero();
    for (std::size_t i = 0; i < la; ++i) {
      if (ops_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < lb; ++j)
        out[i + j] = ops_.add(out[i + j], ops_.mul(a[i], b[j]));
    }
    return lo;
  }

  // a -= b in place; returns the trimmed length.
  std::size_t sub_into(S* a, std::size_t la, const S* b, std::size_t lb) {
    std::size_t lo = la > lb ? la : lb;
    for (std::size_t i = la; i < lo; ++i) a[i] = ops_.zero();
    for (std::size_t i = 0; i < lb; ++i) a[i] = ops_.sub(a[i], b[i]);
    while (lo > 0 && ops_.is_zero(a[lo - 1])) --lo;
    return lo;
  }

  // Exact quotient of num by the monic poly div; destroys num.
  std::size_t div_monic(S* num, std::size_t ln, const S* div, std::size_t ld, S* out) {
    if (ln < ld) return 0;
    const std::size_t lq = ln - ld + 1;
    for (std::size_t s = lq; s-- > 0;) {
      S c = num[s + ld - 1];
      out[s] = c;
      if (ops_.is_zero(c)) continue;
      for (std::size_t i = 0; i + 1 < ld; ++i)
        num[s + i] = ops_.sub(num[s + i], ops_.mul(c, div[i]));
      num[s + ld - 1] = ops_.zero();
    }
    std::size_t lo = lq;
    while (lo > 0 && ops_.is_zero(out[lo - 1])) --lo;
    return lo;
  }

  Ops ops_;
  std::vector<S> pool_, t1_, t2_, prev_;
  std::vector<std::size_t> len_;
};

// Packed finite-field scalars.
struct FieldCodeOps {
  using S = std::uint64_t;
  const FieldRep* f;
  S zero() const { return 0; }
  S one() const { return 1; }
  S add(S a, S b) const { return f->add(a, b); }
  S sub(S a, S b) const { return f->sub(a, b); }
  S mul(S a, S b) const { return f->mul(a, b); }
  S neg(S a) const { return f->neg(a); }
  bool is_zero(S a) const { return a == 0; }
  S exact_div(S a, S b) const { return f->mul(a, f->inv(b)); }
};

// Exact integer scalars; exact_div is used only where divisibility holds.
struct IntOps {
  using S = long long;
  S zero() const { return 0; }
  S one() const { return 1; }
  S add(S a, S b) const { return a + b; }
  S sub(S a, S b) const { return a - b; }
  S mul(S a, S b) const { return a * b; }
  S neg(S a) const { return -a; }
  bool is_zero(S a) const { return a == 0; }
  S exact_div(S a, S b) const { return a / b; }
};

}  // namespace lced::detail

#endif
