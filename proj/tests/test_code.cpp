#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lced/code.hpp"
#include "oracle.hpp"

using namespace lced;

namespace {

std::vector<FieldElement> row_of(const Matrix& m, std::size_t i) {
  std::vector<FieldElement> r;
  for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
  return r;
}

}  // namespace

TEST_CASE("code construction and membership") {
  Field f = Field::prime(3);
  Matrix g = Matrix::from_rows(f, {{1, 0, 2}, {0, 1, 2}});
  LinearCode c = LinearCode::from_generator(g);
  CHECK(c.length() == 3);
  CHECK(c.dimension() == 2);
  CHECK(c.contains(row_of(g, 0)));
  CHECK(c.contains({f.element(1), f.element(1), f.element(4)}));
  CHECK_FALSE(c.contains({f.element(0), f.element(0), f.element(1)}));

  CHECK_THROWS_AS(
      LinearCode::from_generator(Matrix::from_rows(f, {{1, 2, 0}, {2, 4, 0}})),
      RankDeficientError);
}

TEST_CASE("membership agrees with brute-force span enumeration") {
  detail::SplitMix64 rng(31);
  for (const auto& lit : {"2", "3", "2^2:1,1,1"}) {
    Field f = Field::parse(lit);
    for (int t = 0; t < 30; ++t) {
      Matrix g = oracle::random_full_rank(f, 2, 5, rng);
      LinearCode c = LinearCode::from_generator(g);
      for (int w = 0; w < 20; ++w) {
        std::vector<FieldElement> word;
        for (std::size_t j = 0; j < 5; ++j)
          word.push_back(f.from_index(rng.below(f.order())));
        CHECK(c.contains(word) == oracle::in_row_space(g, word));
      }
    }
  }
}

TEST_CASE("row operations preserve the code, permutations change it") {
  Field f = Field::prime(5);
  detail::SplitMix64 rng(32);
  Matrix g = oracle::random_full_rank(f, 3, 6, rng);
  LinearCode c = LinearCode::from_generator(g);
  Matrix e = oracle::random_invertible(f, 3, rng);
  CHECK(LinearCode::from_generator(e * g) == c);
  CHECK(c.rref_generator() == LinearCode::from_generator(e * g).rref_generator());
}

TEST_CASE("dual code is the orthogonal complement") {
  detail::SplitMix64 rng(33);
  for (const auto& lit : {"2", "3", "7"}) {
    Field f = Field::parse(lit);
    for (int t = 0; t < 40; ++t) {
      Matrix g = oracle::random_full_rank(f, 2, 5, rng);
      LinearCode c = LinearCode::from_generator(g);
      LinearCode d = dual(c);
      CHECK(d.dimension() == 3);
      CHECK((g * d.generator().transpose()).is_zero());
      CHECK(dual(d) == c);
    }
  }
}

TEST_CASE("LCP detection matches the Gram determinant for (C, dual C)") {
  detail::SplitMix64 rng(34);
  Field f = Field::prime(5);
  for (int t = 0; t < 60; ++t) {
    Matrix g = oracle::random_full_rank(f, 2, 4, rng);
    LinearCode c = LinearCode::from_generator(g);
    const bool gram_invertible =
        !oracle::gram_perm_det(g, Permutation(4)).is_zero();
    CHECK(is_lcp(c, dual(c)) == gram_invertible);
  }
  // Complementary dimensions are required.
  Matrix g = Matrix::from_rows(f, {{1, 0, 0}});
  CHECK_FALSE(is_lcp(LinearCode::from_generator(g),
                     LinearCode::from_generator(g)));
}

TEST_CASE("all-ones membership matches brute force") {
  detail::SplitMix64 rng(35);
  Field f = Field::prime(3);
  for (int t = 0; t < 50; ++t) {
    Matrix g = oracle::random_full_rank(f, 2, 4, rng);
    LinearCode c = LinearCode::from_generator(g);
    EMembership em = e_membership(c);
    std::vector<FieldElement> e(4, f.one());
    CHECK(em.in_code == oracle::in_row_space(g, e));
    CHECK(em.in_dual == oracle::in_row_space(dual(c).generator(), e));
  }
}

TEST_CASE("cyclic code rows are shifts of the generator polynomial") {
  Field f = Field::prime(2);
  Polynomial g = Polynomial::from_coeffs(f, {1, 0, 1, 0, 1});
  CyclicSpec spec{g, 12, f.one()};
  LinearCode c = cyclic_code(spec);
  CHECK(c.length() == 12);
  CHECK(c.dimension() == 8);
  const Matrix& gen = c.generator();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      FieldElement expected =
          (j >= i && j - i <= 4) ? g.coeff(j - i) : f.zero();
      CHECK(gen.at(i, j) == expected);
    }
  // The code is closed under the cyclic shift.
  for (std::size_t i = 0; i < 8; ++i) {
    std::vector<FieldElement> row = row_of(gen, i);
    std::vector<FieldElement> shifted(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
      shifted[(j + 1) % row.size()] = row[j];
    CHECK(c.contains(shifted));
  }

  CHECK_THROWS_AS(cyclic_code(CyclicSpec{Polynomial::from_coeffs(f, {1, 1, 1}),
                                         4, f.one()}),
                  NotADivisorError);
}

TEST_CASE("constacyclic closure under the twisted shift") {
  Field f = Field::prime(3);
  // x^4 - 2 = x^4 + 1 over F_3; g = x^2 + x + 2 divides it:
  // (x^2 + x + 2)(x^2 - x + 2) = x^4 + 3x^2 + 4 = x^4 + 1.
  Polynomial g = Polynomial::from_coeffs(f, {2, 1, 1});
  FieldElement lambda = f.element(2);
  LinearCode c = cyclic_code(CyclicSpec{g, 4, lambda});
  CHECK(c.dimension() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<FieldElement> row = row_of(c.generator(), i);
    std::vector<FieldElement> shifted(row.size());
    shifted[0] = lambda * row[row.size() - 1];
    for (std::size_t j = 0; j + 1 < row.size(); ++j) shifted[j + 1] = row[j];
    CHECK(c.contains(shifted));
  }
}

TEST_CASE("Toeplitz blocks carry the generator coefficients") {
  Field f = Field::prime(5);
  Polynomial g = Polynomial::from_coeffs(f, {3, 1, 4, 2});  // degree 3
  ToeplitzBlocks tb = toeplitz_blocks(g, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(tb.upper.at(i, j) ==
            (j >= i ? g.coeff(j - i) : f.zero()));
      CHECK(tb.lower.at(i, j) ==
            (i >= j ? g.coeff(3 + j - i) : f.zero()));
    }
  CHECK(tb.upper.at(0, 0) == g.coeff(0));
  CHECK(tb.lower.at(0, 0) == g.leading());
  CHECK_THROWS_AS(toeplitz_blocks(g, 2), DegreeMismatchError);
}

TEST_CASE("minimum distance matches brute force") {
  detail::SplitMix64 rng(36);
  for (const auto& lit : {"2", "3"}) {
    Field f = Field::parse(lit);
    for (int t = 0; t < 30; ++t) {
      Matrix g = oracle::random_full_rank(f, 2, 6, rng);
      LinearCode c = LinearCode::from_generator(g);
      CHECK(min_distance(c) == oracle::min_distance(g));
    }
  }
  Field f = Field::prime(2);
  LinearCode c = LinearCode::from_generator(
      Matrix::from_rows(f, {{1, 0, 1, 1}, {0, 1, 1, 0}}));
  CHECK_THROWS_AS(min_distance(c, 2), BudgetExceededError);
}

TEST_CASE("security parameter of an LCP pair") {
  Field f = Field::prime(5);
  Matrix g = Matrix::from_rows(f, {{1, 0, 1}, {0, 1, 1}});
  LinearCode c = LinearCode::from_generator(g);
  LinearCode d = dual(c);
  REQUIRE(is_lcp(c, d));
  // dual(d) = c, so the parameter is min(d(C), d(C)).
  CHECK(security_parameter(c, d) == oracle::min_distance(g));

  // Over F_3 the same shape has singular Gram matrix, so no LCP.
  Field f3 = Field::prime(3);
  Matrix bad = Matrix::from_rows(f3, {{1, 0, 1}, {0, 1, 1}});
  LinearCode cb = LinearCode::from_generator(bad);
  REQUIRE_FALSE(is_lcp(cb, dual(cb)));
  CHECK_THROWS_AS(security_parameter(cb, dual(cb)), NotLcpError);
}
