#include "lced/code.hpp"

#include <algorithm>

#include "lced/detail/field_rep.hpp"

namespace lced {

LinearCode LinearCode::from_generator(const Matrix& g) {
  GaussResult r = gauss(g);
  if (r.rank < g.rows()) throw RankDeficientError(r.rank);
  return LinearCode(g, std::move(r.rref));
}

bool LinearCode::contains(const std::vector<FieldElement>& word) const {
  if (word.size() != length()) throw ShapeMismatchError("word length");
  Matrix w(field(), 1, length());
  for (std::size_t j = 0; j < word.size(); ++j) w.at(0, j) = word[j];
  return gauss(gen_.vstack(w)).rank == dimension();
}

LinearCode dual(const LinearCode& c) {
  const Matrix& r = c.rref_generator();
  const std::size_t k = c.dimension(), n = c.length();
  Field f = c.field();
  std::vector<std::size_t> pivots;
  pivots.reserve(k);
  {
    std::size_t col = 0;
    for (std::size_t i = 0; i < k; ++i) {
      while (col < n && r.at(i, col).is_zero()) ++col;
      pivots.push_back(col);
    }
  }
  std::vector<bool> is_piv(n, false);
  for (auto p : pivots) is_piv[p] = true;
  Matrix d(f, n - k, n);
  std::size_t row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    d.at(row, free) = f.one();
    for (std::size_t i = 0; i < k; ++i) d.at(row, pivots[i]) = -r.at(i, free);
    ++row;
  }
  return LinearCode::from_generator(d);
}

bool is_lcp(const LinearCode& c, const LinearCode& d) {
  if (c.field() != d.field()) throw MixedFieldsError();
  if (c.length() != d.length()) throw ShapeMismatchError("code lengths differ");
  if (c.dimension() + d.dimension() != c.length()) return false;
  Matrix h = dual(d).generator();
  Matrix m = c.generator() * h.transpose();
  GaussResult g = gauss(m);
  return g.det.has_value() && !g.det->is_zero();
}

EMembership e_membership(const LinearCode& c) {
  Field f = c.field();
  std::vector<FieldElement> e(c.length(), f.one());
  bool in_dual = true;
  for (std::size_t i = 0; i < c.dimension() && in_dual; ++i)
    in_dual = c.generator().row_sum(i).is_zero();
  return EMembership{c.contains(e), in_dual};
}

LinearCode cyclic_code(const CyclicSpec& spec) {
  Field f = spec.g.field();
  if (spec.lambda.field() != f) throw MixedFieldsError();
  if (spec.g.is_zero()) throw NotADivisorError("zero generator polynomial");
  if (spec.lambda.is_zero()) throw Error("lambda must be a unit");
  Polynomial target =
      Polynomial::monomial(f, spec.n) - Polynomial::from_elements(f, {spec.lambda});
  if (!(target % spec.g).is_zero())
    throw NotADivisorError("generator polynomial does not divide x^n - lambda");
  const std::size_t r = static_cast<std::size_t>(spec.g.degree());
  const std::size_t k = spec.n - r;
  Matrix gen(f, k, spec.n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= r; ++j) gen.at(i, i + j) = spec.g.coeff(j);
  return LinearCode::from_generator(gen);
}

ToeplitzBlocks toeplitz_blocks(const Polynomial& g, std::size_t r) {
  if (g.degree() != static_cast<int>(r))
    throw DegreeMismatchError("polynomial degree does not match the block size");
  Field f = g.field();
  Matrix u(f, r, r), l(f, r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (j >= i) u.at(i, j) = g.coeff(j - i);
      if (j <= i) l.at(i, j) = g.coeff(r + j - i);
    }
  return ToeplitzBlocks{std::move(u), std::move(l)};
}

std::size_t min_distance(const LinearCode& c, std::uint64_t budget) {
  const std::size_t k = c.dimension(), n = c.length();
  if (k == 0) throw BadShapeError("minimum distance of the zero code is undefined");
  Field f = c.field();
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > budget / q) throw BudgetExceededError("codeword enumeration budget");
    total *= q;
  }

  const detail::FieldRep* rep = detail::rep_of(f);
  std::vector<std::uint64_t> rows(k * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rows[i * n + j] = c.generator().at(i, j).index();

  std::vector<std::uint64_t> digit(k, 0), word(n, 0);
  std::size_t best = n + 1;
  for (std::uint64_t count = 1; count < total; ++count) {
    // Incrementing digit t (mod q) adds row t once; a full wrap contributes
    // q copies, which vanish in characteristic p | q.
    std::size_t t = 0;
    while (true) {
      const std::uint64_t* row = rows.data() + t * n;
      for (std::size_t j = 0; j < n; ++j) word[j] = rep->add(word[j], row[j]);
      if (++digit[t] == q) {
        digit[t] = 0;
        ++t;
      } else {
        break;
      }
    }
    std::size_t w = 0;
    for (std::size_t j = 0; j < n; ++j) w += word[j] != 0;
    if (w < best) best = w;
  }
  return best;
}

std::size_t security_parameter(const LinearCode& c, const LinearCode& d,
                               std::uint64_t budget) {
  if (!is_lcp(c, d)) throw NotLcpError("codes do not form a complementary pair");
  return std::min(min_distance(c, budget), min_distance(dual(d), budget));
}

}  // namespace lced
