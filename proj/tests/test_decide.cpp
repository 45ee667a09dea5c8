#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lced/decide.hpp"
#include "oracle.hpp"

using namespace lced;

namespace {

// (I_k | A) for a tail whose entries are given by enumeration index digits,
// row-major, most significant first.
Matrix tail_from_digits(const Field& f, std::size_t k, std::size_t cols,
                        std::uint64_t idx) {
  Matrix a(f, k, cols);
  for (std::size_t i = k; i-- > 0;)
    for (std::size_t j = cols; j-- > 0;) {
      a.at(i, j) = f.from_index(idx % f.order());
      idx /= f.order();
    }
  return a;
}

Matrix standard(const Matrix& a) {
  return Matrix::identity(a.field(), a.rows()).hstack(a);
}

Matrix not_lced_example() {
  return Matrix::from_rows(Field::prime(3), {{1, 0, 2}, {0, 1, 2}});
}

Matrix lced_example() {
  return Matrix::from_rows(Field::prime(2), {{1, 0, 0, 0, 1, 1},
                                             {0, 1, 0, 0, 1, 0},
                                             {0, 0, 1, 0, 0, 1},
                                             {0, 0, 0, 1, 1, 1}});
}

}  // namespace

TEST_CASE("permuted Gram determinant matches the longhand product") {
  detail::SplitMix64 rng(41);
  for (const auto& lit : {"2", "3", "5", "2^2:1,1,1"}) {
    CAPTURE(lit);
    Field f = Field::parse(lit);
    for (int t = 0; t < 50; ++t) {
      Matrix g = oracle::random_matrix(f, 3, 6, rng);
      Permutation p = oracle::random_permutation(6, rng);
      CHECK(det_gpgt(g, p) == oracle::gram_perm_det(g, p));
    }
  }
}

TEST_CASE("reference non-example: every permutation is singular") {
  Matrix g = not_lced_example();

  // Direct evaluation of all 6 permutations of S_3.
  auto ex = oracle::lced_exhaustive(g);
  CHECK(ex.total == 6);
  CHECK(ex.nonsingular_count == 0);

  Verdict v = decide(g);
  CHECK(v.status == Status::not_lced);
  CHECK(v.certificate == CertificateKind::theorem_011);
  CHECK_FALSE(v.witness.has_value());

  // Forced past every shortcut, exhaustion reaches the same verdict while
  // evaluating one representative of each inverse pair: (3! + 4) / 2 = 5.
  for (const auto& name :
       {"identity-first", "transpositions-first", "full-lex", "heap"}) {
    SearchStrategy s;
    s.order = *parse_search_order(name);
    Verdict pure = decide(g, DecideOptions::pure_search(s));
    CAPTURE(name);
    CHECK(pure.status == Status::not_lced);
    CHECK(pure.certificate == CertificateKind::exhausted_search);
    CHECK(pure.perms_examined == 5);
  }
}

TEST_CASE("reference example: witness found and verified") {
  Matrix g = lced_example();
  Verdict v = decide(g);
  CHECK(v.status == Status::lced);
  REQUIRE(v.witness.has_value());
  CHECK_FALSE(oracle::gram_perm_det(g, *v.witness).is_zero());

  // The published block swap is itself a witness with determinant one.
  Permutation swap = Permutation::parse_cycles(6, "(1 5)(2 6)");
  CHECK(det_gpgt(g, swap) == g.field().one());
}

TEST_CASE("decide agrees with exhaustive enumeration on every small tail") {
  struct Cell {
    const char* field;
    std::size_t k, n;
  };
  for (const Cell& cell : {Cell{"2", 2, 4}, Cell{"2", 3, 5}, Cell{"3", 2, 4},
                           Cell{"2^2:1,1,1", 2, 4}}) {
    CAPTURE(cell.field);
    CAPTURE(cell.k);
    CAPTURE(cell.n);
    Field f = Field::parse(cell.field);
    const std::size_t cols = cell.n - cell.k;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cell.k * cols; ++i) total *= f.order();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Matrix g = standard(tail_from_digits(f, cell.k, cols, idx));
      auto ex = oracle::lced_exhaustive(g);
      Verdict v = decide(g);
      CAPTURE(idx);
      CHECK((v.status == Status::lced) == ex.lced);
      if (v.status == Status::lced) {
        REQUIRE(v.witness.has_value());
        CHECK_FALSE(oracle::gram_perm_det(g, *v.witness).is_zero());
      }
    }
  }
}

TEST_CASE("decide handles non-standard and degenerate inputs") {
  Field f = Field::prime(3);
  detail::SplitMix64 rng(42);

  // Random full-rank, not in standard form.
  for (int t = 0; t < 40; ++t) {
    Matrix g = oracle::random_full_rank(f, 2, 5, rng);
    Verdict v = decide(g);
    CHECK((v.status == Status::lced) == oracle::lced_exhaustive(g).lced);
    if (v.witness) CHECK_FALSE(oracle::gram_perm_det(g, *v.witness).is_zero());
  }

  // Dependent rows.
  Matrix dep = Matrix::from_rows(f, {{1, 2, 0}, {2, 4, 0}});
  Verdict v = decide(dep);
  CHECK(v.status == Status::not_lced);
  CHECK(v.certificate == CertificateKind::rank_deficient);

  // Square full-rank: the identity works.
  Verdict sq = decide(Matrix::from_rows(f, {{1, 1}, {0, 1}}));
  CHECK(sq.status == Status::lced);
  CHECK(sq.certificate == CertificateKind::identity);

  // Empty code.
  Verdict empty = decide(Matrix(f, 0, 3));
  CHECK(empty.status == Status::lced);
}

TEST_CASE("status is invariant under row operations and permutations") {
  detail::SplitMix64 rng(43);
  for (const auto& lit : {"2", "3"}) {
    Field f = Field::parse(lit);
    for (int t = 0; t < 25; ++t) {
      Matrix g = oracle::random_full_rank(f, 3, 5, rng);
      Status base = decide(g).status;
      for (int r = 0; r < 8; ++r) {
        Matrix e = oracle::random_invertible(f, 3, rng);
        Permutation p = oracle::random_permutation(5, rng);
        CHECK(decide(e * g * perm_matrix(p, f)).status == base);
      }
    }
  }
}

TEST_CASE("status transfers to the dual code") {
  detail::SplitMix64 rng(44);
  Field f = Field::prime(2);
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    Matrix a = tail_from_digits(f, 3, 2, idx);
    Matrix g = standard(a);
    Matrix dual_g = standard(-a.transpose());
    CHECK(decide(g).status == decide(dual_g).status);
  }
}

TEST_CASE("necessary condition matches its definition") {
  detail::SplitMix64 rng(45);
  for (const auto& lit : {"2", "3", "5"}) {
    Field f = Field::parse(lit);
    for (int t = 0; t < 60; ++t) {
      Matrix g = oracle::random_matrix(f, 2, 4, rng);
      std::vector<FieldElement> e(4, f.one());
      bool rows_sum_zero = g.row_sum(0).is_zero() && g.row_sum(1).is_zero();
      bool expected = rows_sum_zero && oracle::in_row_space(g, e);
      CHECK(necessary_condition(g) == expected);
    }
  }
  CHECK(necessary_condition(not_lced_example()));
}

TEST_CASE("the necessary condition certificate is sound") {
  // Whenever decide reports the row-sum certificate, exhaustive search
  // confirms no witness exists.
  Field f = Field::prime(2);
  for (std::uint64_t idx = 0; idx < 256; ++idx) {
    Matrix g = standard(tail_from_digits(f, 2, 4, idx));
    Verdict v = decide(g);
    if (v.certificate == CertificateKind::theorem_011)
      CHECK_FALSE(oracle::lced_exhaustive(g).lced);
  }
}

TEST_CASE("closed forms agree with pure search where they apply") {
  DecideOptions closed;
  closed.use_necessary_condition = false;
  closed.use_quick_sufficient = false;

  // Single-column tails.
  for (const auto& lit : {"2", "3"}) {
    Field f = Field::parse(lit);
    for (std::size_t k = 1; k <= 3; ++k) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < k; ++i) total *= f.order();
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        Matrix g = standard(tail_from_digits(f, k, 1, idx));
        CHECK(decide(g, closed).status ==
              decide(g, DecideOptions::pure_search()).status);
      }
    }
  }

  // Two-row tails.
  Field f = Field::prime(3);
  for (std::uint64_t idx = 0; idx < 81; ++idx) {
    Matrix g = standard(tail_from_digits(f, 2, 2, idx));
    CHECK(decide(g, closed).status ==
          decide(g, DecideOptions::pure_search()).status);
  }
}

TEST_CASE("closed-form single-column certificates carry usable witnesses") {
  Field f = Field::prime(5);
  for (std::uint64_t idx = 0; idx < 625; ++idx) {
    Matrix g = standard(tail_from_digits(f, 4, 1, idx));
    Verdict v = decide(g);
    if (v.status == Status::lced) {
      REQUIRE(v.witness.has_value());
      CHECK_FALSE(oracle::gram_perm_det(g, *v.witness).is_zero());
    }
  }
}

TEST_CASE("quick block probes produce verified witnesses") {
  detail::SplitMix64 rng(46);
  Field f = Field::prime(3);
  int hits = 0;
  for (int t = 0; t < 200; ++t) {
    Matrix a = oracle::random_matrix(f, 3, 3, rng);
    if (auto w = quick_sufficient(a)) {
      ++hits;
      Matrix g = standard(a);
      CHECK_FALSE(oracle::gram_perm_det(g, *w).is_zero());
      // Block witnesses fix the information set.
      for (std::size_t j = 0; j < 3; ++j) CHECK(w->apply(j) == j);
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("search limit semantics") {
  Matrix g = not_lced_example();
  SearchStrategy s;
  s.limit = 3;
  CHECK_THROWS_AS((void)witness_search(g, s), LimitReachedError);
  try {
    (void)witness_search(g, s);
  } catch (const LimitReachedError& e) {
    CHECK(e.examined == 3);
  }

  // A capped search can still succeed when a witness appears early.
  Matrix ok = lced_example();
  SearchStrategy roomy;
  roomy.limit = 100;
  Verdict v = witness_search(ok, roomy);
  CHECK(v.status == Status::lced);
}

TEST_CASE("settled closed-form statuses survive a capped witness search") {
  // k = 2, criterion false (so LCED is settled), but one evaluation is not
  // enough to exhibit a witness.
  Field f = Field::prime(2);
  Matrix g = lced_example();
  DecideOptions opt;
  opt.strategy.limit = 1;
  Verdict v = decide(g, opt);
  CHECK(v.status == Status::lced);
  CHECK_FALSE(v.witness.has_value());
  CHECK(v.certificate == CertificateKind::closed_form_k2);

  // Without the closed forms the same cap is inconclusive.
  DecideOptions pure = DecideOptions::pure_search();
  pure.strategy.limit = 1;
  CHECK_THROWS_AS((void)decide(g, pure), LimitReachedError);
}

TEST_CASE("seeded probing changes the path, never the answer") {
  detail::SplitMix64 rng(47);
  Field f = Field::prime(2);
  for (int t = 0; t < 25; ++t) {
    Matrix g = oracle::random_full_rank(f, 3, 6, rng);
    DecideOptions seeded;
    seeded.strategy.seed = 99 + t;
    Verdict a = decide(g);
    Verdict b = decide(g, seeded);
    CHECK(a.status == b.status);
    if (b.witness) CHECK_FALSE(oracle::gram_perm_det(g, *b.witness).is_zero());
  }
}

TEST_CASE("strategy fingerprints are stable and descriptive") {
  SearchStrategy s;
  CHECK(strategy_fingerprint(s) == "order=identity-first;limit=unlimited;seed=0");
  s.order = SearchOrder::heap;
  s.limit = 42;
  s.seed = 7;
  CHECK(strategy_fingerprint(s) == "order=heap;limit=42;seed=7");
  CHECK(parse_search_order("full-lex") == SearchOrder::full_lex);
  CHECK_FALSE(parse_search_order("bogus").has_value());
}

TEST_CASE("canonical forms are invariant representatives") {
  detail::SplitMix64 rng(48);
  Field f = Field::prime(2);
  for (int t = 0; t < 30; ++t) {
    Matrix a = oracle::random_matrix(f, 2, 3, rng);
    CanonicalForm cf = canonicalize(a);
    REQUIRE(cf.exact);
    // Idempotent, and invariant under row/column permutations of the input.
    CHECK(canonicalize(cf.matrix).matrix == cf.matrix);
    Permutation pr = oracle::random_permutation(2, rng);
    Permutation pc = oracle::random_permutation(3, rng);
    Matrix shuffled(f, 2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        shuffled.at(pr.apply(i), pc.apply(j)) = a.at(i, j);
    CHECK(canonicalize(shuffled).matrix == cf.matrix);
    // Equivalence preserves the decision.
    CHECK(decide(standard(a)).status == decide(standard(cf.matrix)).status);
  }

  Matrix a = oracle::random_matrix(f, 2, 3, rng);
  CanonicalForm capped = canonicalize(a, 1);
  CHECK_FALSE(capped.exact);
  CHECK(capped.matrix == a);
}

TEST_CASE("orbit sizes count distinct row/column rearrangements") {
  Field f = Field::prime(5);
  CHECK(orbit_size(Matrix(f, 2, 2)) == 1);
  Matrix distinct = Matrix::from_rows(f, {{0, 1}, {2, 3}});
  CHECK(orbit_size(distinct) == 4);
  Matrix m = Matrix::from_rows(f, {{0, 1, 2}, {3, 4, 0}});
  CHECK(orbit_size(m) == 12);  // all 2! x 3! images distinct
}

TEST_CASE("dual transfer preserves status and produces verified witnesses") {
  detail::SplitMix64 rng(49);
  Field f = Field::prime(3);
  for (int t = 0; t < 30; ++t) {
    Matrix a = oracle::random_matrix(f, 2, 3, rng);
    Verdict primal = decide(standard(a));
    Verdict moved = dual_transfer(primal, a);
    Matrix dual_g = standard(-a.transpose());
    CHECK((moved.status == Status::lced) ==
          oracle::lced_exhaustive(dual_g).lced);
    if (moved.witness)
      CHECK_FALSE(oracle::gram_perm_det(dual_g, *moved.witness).is_zero());
  }
}

TEST_CASE("constacyclic coprimality criterion") {
  Field f = Field::prime(2);
  Polynomial xp1 = Polynomial::from_coeffs(f, {1, 1});
  CHECK(constacyclic_sufficient(CyclicSpec{xp1, 3, f.one()}));
  CHECK_FALSE(constacyclic_sufficient(CyclicSpec{xp1, 4, f.one()}));
  CHECK_THROWS_AS(
      (void)constacyclic_sufficient(
          CyclicSpec{Polynomial::from_coeffs(f, {1, 1, 1}), 4, f.one()}),
      NotADivisorError);

  // When the criterion holds, the decision is LCED.
  Verdict v = decide(cyclic_code(CyclicSpec{xp1, 3, f.one()}).generator());
  CHECK(v.status == Status::lced);
}

TEST_CASE("reciprocal construction on three-term products") {
  Field f = Field::prime(2);
  Polynomial g = Polynomial::from_coeffs(f, {1, 0, 1, 0, 1});
  auto w = reciprocal_construction(g, 12);
  REQUIRE(w.has_value());
  CHECK(w->cycles() == "(1 9)(2 10)(3 11)(4 12)");
  Matrix gen = cyclic_code(CyclicSpec{g, 12, f.one()}).generator();
  CHECK(det_gpgt(gen, *w) == f.one());
  CHECK_FALSE(oracle::gram_perm_det(gen, *w).is_zero());

  // g g* lacking the three-term shape yields no witness.
  CHECK_FALSE(
      reciprocal_construction(Polynomial::from_coeffs(f, {1, 1, 0, 1}), 9)
          .has_value());

  CHECK_THROWS_AS((void)reciprocal_construction(
                      Polynomial::from_coeffs(Field::prime(3), {1, 1}), 3),
                  WrongCharacteristicError);
  CHECK_THROWS_AS((void)reciprocal_construction(g, 11), BadShapeError);
}
