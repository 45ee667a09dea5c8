#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "lced/matrix.hpp"
#include "oracle.hpp"

using namespace lced;

TEST_CASE("construction, shape, and entry access") {
  Field f = Field::prime(5);
  Matrix m = Matrix::from_rows(f, {{1, 2, 3}, {4, 0, -1}});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.at(1, 2) == f.element(4));
  CHECK(Matrix::identity(f, 3).trace() == f.element(3));
  CHECK(Matrix::ones(f, 2, 2).entry_sum() == f.element(4));
  CHECK_THROWS_AS(Matrix::from_rows(f, {{1, 2}, {1}}), ShapeMismatchError);
}

TEST_CASE("arithmetic matches hand-computed products") {
  Field f = Field::prime(7);
  Matrix a = Matrix::from_rows(f, {{1, 2}, {3, 4}});
  Matrix b = Matrix::from_rows(f, {{5, 6}, {0, 1}});
  CHECK(a * b == Matrix::from_rows(f, {{5, 8}, {15, 22}}));
  CHECK(a + b == Matrix::from_rows(f, {{6, 8}, {3, 5}}));
  CHECK(a - a == Matrix(f, 2, 2));
  CHECK(-a == Matrix::from_rows(f, {{-1, -2}, {-3, -4}}));
  CHECK(a * Matrix::identity(f, 2) == a);
  CHECK(a * f.element(2) == a + a);
  CHECK_THROWS_AS(a * Matrix(f, 3, 3), ShapeMismatchError);
}

TEST_CASE("row, column, and entry sums") {
  Field f = Field::prime(5);
  Matrix m = Matrix::from_rows(f, {{1, 2, 3}, {4, 4, 0}});
  CHECK(m.row_sum(0) == f.element(6));
  CHECK(m.col_sum(1) == f.element(6));
  CHECK(m.entry_sum() == f.element(14));
  CHECK(m.transpose().at(2, 0) == f.element(3));
  CHECK(m.transpose().transpose() == m);
}

TEST_CASE("stacking and blocks recompose") {
  Field f = Field::prime(3);
  Matrix a = Matrix::from_rows(f, {{1, 2}, {0, 1}});
  Matrix b = Matrix::from_rows(f, {{2, 2}, {1, 0}});
  Matrix h = a.hstack(b);
  CHECK(h.cols() == 4);
  CHECK(h.block(0, 0, 2, 2) == a);
  CHECK(h.block(0, 2, 2, 2) == b);
  Matrix v = a.vstack(b);
  CHECK(v.rows() == 4);
  CHECK(v.block(2, 0, 2, 2) == b);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  detail::SplitMix64 rng(21);
  for (const auto& lit : {"2", "3", "5", "7", "2^2:1,1,1"}) {
    CAPTURE(lit);
    Field f = Field::parse(lit);
    for (std::size_t k = 1; k <= 5; ++k)
      for (int t = 0; t < 40; ++t) {
        Matrix m = oracle::random_matrix(f, k, k, rng);
        auto gr = gauss(m);
        REQUIRE(gr.det.has_value());
        CHECK(*gr.det == oracle::det(m));
      }
  }
}

TEST_CASE("determinant is multiplicative and transpose-invariant") {
  detail::SplitMix64 rng(22);
  Field f = Field::prime(5);
  for (int t = 0; t < 150; ++t) {
    Matrix a = oracle::random_matrix(f, 4, 4, rng);
    Matrix b = oracle::random_matrix(f, 4, 4, rng);
    CHECK(*gauss(a * b).det == *gauss(a).det * *gauss(b).det);
    CHECK(*gauss(a.transpose()).det == *gauss(a).det);
  }
}

TEST_CASE("gauss produces a reduced echelon form of the right rank") {
  Field f = Field::prime(3);
  Matrix m = Matrix::from_rows(f, {{1, 2, 0}, {2, 4, 0}, {0, 0, 1}});
  auto gr = gauss(m);
  CHECK(gr.rank == 2);
  CHECK(gr.pivot_cols == std::vector<std::size_t>{0, 2});
  // RREF is a fixed point.
  CHECK(gauss(gr.rref).rref == gr.rref);

  detail::SplitMix64 rng(23);
  for (int t = 0; t < 100; ++t) {
    Matrix a = oracle::random_matrix(f, 3, 5, rng);
    auto g1 = gauss(a);
    // Row operations preserve the RREF.
    Matrix e = oracle::random_invertible(f, 3, rng);
    CHECK(gauss(e * a).rref == g1.rref);
  }
}

TEST_CASE("standard form reassembles the input") {
  detail::SplitMix64 rng(24);
  for (const auto& lit : {"2", "3", "2^2:1,1,1"}) {
    Field f = Field::parse(lit);
    for (int t = 0; t < 60; ++t) {
      Matrix g = oracle::random_full_rank(f, 3, 6, rng);
      StandardForm sf = standard_form(g);
      Matrix lhs = sf.row_ops * g * perm_matrix(sf.col_perm, f);
      Matrix expected =
          Matrix::identity(f, 3).hstack(sf.tail);
      CHECK(lhs == expected);
      CHECK_FALSE(gauss(sf.row_ops).det->is_zero());
    }
  }
  Field f = Field::prime(2);
  CHECK_THROWS_AS(standard_form(Matrix::from_rows(f, {{1, 1}, {1, 1}})),
                  RankDeficientError);
}

TEST_CASE("permutation algebra") {
  Permutation id(5);
  CHECK(id.is_identity());
  CHECK(id.cycles() == "id");
  CHECK(Permutation::parse_cycles(5, "id") == id);
  CHECK(Permutation::parse_cycles(5, "") == id);

  Permutation p = Permutation::parse_cycles(6, "(1 5)(2 6)");
  CHECK(p.cycles() == "(1 5)(2 6)");
  CHECK(p.apply(0) == 4);
  CHECK(p.moved_points() == 4);
  CHECK(p.compose(p) == Permutation(6));
  CHECK(p.inverse() == p);

  Permutation t = Permutation::transposition(4, 2, 3);
  CHECK(t.cycles() == "(2 3)");

  detail::SplitMix64 rng(25);
  for (int i = 0; i < 50; ++i) {
    Permutation a = oracle::random_permutation(7, rng);
    Permutation b = oracle::random_permutation(7, rng);
    CHECK(a.compose(a.inverse()).is_identity());
    // compose follows function application: (a b)(j) = a(b(j)).
    for (std::size_t j = 0; j < 7; ++j)
      CHECK(a.compose(b).apply(j) == a.apply(b.apply(j)));
    CHECK(Permutation::parse_cycles(7, a.cycles()) == a);
  }
}

TEST_CASE("perm_matrix is a homomorphism with columns e_sigma(j)") {
  Field f = Field::prime(5);
  detail::SplitMix64 rng(26);
  CHECK(perm_matrix(Permutation(4), f) == Matrix::identity(f, 4));
  for (int t = 0; t < 50; ++t) {
    Permutation a = oracle::random_permutation(5, rng);
    Permutation b = oracle::random_permutation(5, rng);
    CHECK(perm_matrix(a.compose(b), f) ==
          perm_matrix(a, f) * perm_matrix(b, f));
    Matrix pa = perm_matrix(a, f);
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t i = 0; i < 5; ++i)
        CHECK(pa.at(i, j) == (i == a.apply(j) ? f.one() : f.zero()));
  }
}

TEST_CASE("characteristic polynomial matches principal minor sums") {
  detail::SplitMix64 rng(27);
  for (const auto& lit : {"2", "7", "3^2:1,0,1"}) {
    Field f = Field::parse(lit);
    for (std::size_t k = 1; k <= 5; ++k)
      for (int t = 0; t < 25; ++t) {
        Matrix m = oracle::random_matrix(f, k, k, rng);
        Polynomial cp = char_poly(m);
        REQUIRE(cp.degree() == static_cast<int>(k));
        CHECK(cp.leading().is_one());
        // coeff of x^{k-r} is (-1)^r delta_r.
        FieldElement sign = f.one();
        for (unsigned r = 0; r <= k; ++r) {
          CHECK(cp.coeff(k - r) == sign * minor_sum_delta(m, r));
          if (r == k) CHECK(minor_sum_delta(m, r) == *gauss(m).det);
          sign = -sign;
        }
      }
  }
}

TEST_CASE("characteristic polynomial of permutation matrices by cycle type") {
  Field f = Field::prime(3);
  detail::SplitMix64 rng(28);
  for (int t = 0; t < 40; ++t) {
    Permutation p = oracle::random_permutation(6, rng);
    // Extract cycle lengths directly from the image table.
    std::vector<std::size_t> lens;
    std::vector<bool> seen(6, false);
    for (std::size_t s = 0; s < 6; ++s) {
      if (seen[s]) continue;
      std::size_t len = 0, j = s;
      while (!seen[j]) {
        seen[j] = true;
        j = p.apply(j);
        ++len;
      }
      lens.push_back(len);
    }
    CHECK(char_poly(perm_matrix(p, f)) == perm_cycle_charpoly(lens, 6, f));
  }
  CHECK(perm_cycle_charpoly({2, 2}, 6, f) ==
        char_poly(perm_matrix(Permutation::parse_cycles(6, "(1 5)(2 6)"), f)));
}

TEST_CASE("minor sums are guarded") {
  Field f = Field::prime(2);
  Matrix m = Matrix::identity(f, 3);
  CHECK(minor_sum_delta(m, 0).is_one());
  CHECK(minor_sum_delta(m, 2) == f.element(3));
  CHECK_THROWS_AS(minor_sum_delta(m, 4), BadRError);
  CHECK_THROWS_AS(minor_sum_delta(Matrix::identity(f, 13), 1), BadRError);
}

TEST_CASE("eigenvalue detection") {
  Field f = Field::prime(5);
  detail::SplitMix64 rng(29);
  for (int t = 0; t < 60; ++t) {
    Matrix m = oracle::random_matrix(f, 3, 3, rng);
    Polynomial cp = char_poly(m);
    for (std::uint64_t i = 0; i < 5; ++i) {
      FieldElement lam = f.from_index(i);
      CHECK(has_eigenvalue(m, lam) == cp.eval(lam).is_zero());
    }
  }
}
