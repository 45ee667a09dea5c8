#ifndef LCED_DETAIL_MINORS_HPP
#define LCED_DETAIL_MINORS_HPP

#include <cstddef>
#include <vector>

namespace lced::detail {

// Determinant by fraction-free (Bareiss) elimination: every division is by
// the previous pivot and is exact, so the routine is valid over the integers
// as well as over a field. Destroys a.
template <class Ops>
typename Ops::S bareiss_det(const Ops& ops, std::vector<typename Ops::S>& a,
                            std::size_t r) {
  using S = typename Ops::S;
  if (r == 0) return ops.one();
  bool flip = false;
  S prev = ops.one();
  for (std::size_t l = 0; l + 1 < r; ++l) {
    if (ops.is_zero(a[l * r + l])) {
      std::size_t sel = r;
      for (std::size_t i = l + 1; i < r; ++i)
        if (!ops.is_zero(a[i * r + l])) {
          sel = i;
          break;
        }
      if (sel == r) return ops.zero();
      for (std::size_t j = l; j < r; ++j)
        std::swap(a[sel * r + j], a[l * r + j]);
      flip = !flip;
    }
    const S piv = a[l * r + l];
    for (std::size_t i = l + 1; i < r; ++i)
      for (std::size_t j = l + 1; j < r; ++j)
        a[i * r + j] = ops.exact_div(
            ops.sub(ops.mul(a[i * r + j], piv), ops.mul(a[i * r + l], a[l * r + j])),
            prev);
    prev = piv;
  }
  S det = a[(r - 1) * r + (r - 1)];
  return flip ? ops.neg(det) : det;
}

// Sum of all r x r principal minors of the k x k matrix m, enumerating the
// C(k, r) row/column subsets in lexicographic order.
template <class Ops>
typename Ops::S principal_minor_sum(const Ops& ops, const typename Ops::S* m,
                                    std::size_t k, std::size_t r) {
  using S = typename Ops::S;
  if (r == 0) return ops.one();
  if (r > k) return ops.zero();
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<S> sub(r * r);
  S sum = ops.zero();
  for (;;) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sub[i * r + j] = m[idx[i] * k + idx[j]];
    sum = ops.add(sum, bareiss_det(ops, sub, r));
    std::size_t t = r;
    while (t > 0 && idx[t - 1] == k - r + t - 1) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t i = t; i < r; ++i) idx[i] = idx[i - 1] + 1;
  }
  return sum;
}

}  // namespace lced::detail

#endif
