#ifndef LCED_MATRIX_HPP
#define LCED_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lced/field.hpp"
#include "lced/poly.hpp"

namespace lced {

// Dense matrix over a finite field, row-major.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

  // Entries reduced from integers, row-major rows.
  static Matrix from_rows(Field f,
                          const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix identity(Field f, std::size_t n);
  static Matrix ones(Field f, std::size_t rows, std::size_t cols);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const FieldElement& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  FieldElement& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const FieldElement& s) const;
  Matrix operator-() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  FieldElement row_sum(std::size_t i) const;
  FieldElement col_sum(std::size_t j) const;
  FieldElement entry_sum() const;
  FieldElement trace() const;

  // [this | o] and [this ; o].
  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> e_;
};

// Permutation of {1..n}. Internally 0-based; the published image list and
// cycle notation are 1-based.
class Permutation {
 public:
  explicit Permutation(std::size_t n);  // identity

  // images[j] = sigma(j+1), 1-based values.
  static Permutation from_images(const std::vector<std::size_t>& images);
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);

  // Disjoint cycle notation with 1-based points, e.g. "(1 5)(2 6)"; "id" or
  // an empty string parses to the identity.
  static Permutation parse_cycles(std::size_t n, const std::string& text);

  std::size_t size() const { return img_.size(); }
  std::size_t apply(std::size_t j) const { return img_[j]; }  // 0-based
  std::size_t operator()(std::size_t j) const { return img_[j]; }

  Permutation inverse() const;
  // (sigma.compose(tau))(j) = sigma(tau(j)).
  Permutation compose(const Permutation& tau) const;

  bool is_identity() const;
  std::size_t moved_points() const;
  std::string cycles() const;
  std::vector<std::size_t> images_1based() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<std::uint32_t> img_;
};

struct GaussResult {
  std::size_t rank = 0;
  std::optional<FieldElement> det;  // square input only
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
  GaussResult(Field f, std::size_t r, std::size_t c) : rref(f, r, c) {}
};

// Reduced row echelon form by exact Gauss-Jordan elimination; pivots are the
// first nonzero entry of each column, scanning columns left to right.
GaussResult gauss(const Matrix& m);

struct StandardForm {
  Matrix row_ops;       // E, invertible k x k
  Permutation col_perm; // sigma with E G P_sigma = (I | A)
  Matrix tail;          // A, k x (n-k)
};

// Throws RankDeficientError when the input has dependent rows. Pivot columns
// are taken left to right and moved, in order, to the front.
StandardForm standard_form(const Matrix& g);

// P[sigma(j), j] = 1: P e_j = e_{sigma(j)}, and P M^T permutes rows by
// sigma^{-1}. Satisfies P_sigma P_tau = P_{sigma o tau}.
Matrix perm_matrix(const Permutation& sigma, Field f);

// det(xI - M), monic, by fraction-free elimination over F[x]. Pivots along
// the way are leading principal minors of xI - M, monic and never zero, so
// no pivot search is needed.
Polynomial char_poly(const Matrix& m);

// Sum of all principal r x r minors, by direct enumeration of the C(k, r)
// index subsets. Guarded to k <= 12; throws BadRError beyond that or when
// r > k. delta_0 = 1.
FieldElement minor_sum_delta(const Matrix& m, unsigned r);

// Characteristic polynomial of any permutation matrix with the given cycle
// type on k points: the product of x^len - 1 over the cycles, times
// (x - 1)^(k - sum of lengths) for the unlisted fixed points.
Polynomial perm_cycle_charpoly(const std::vector<std::size_t>& cycle_lengths,
                               std::size_t k, Field f);

// det(M - lambda I) == 0.
bool has_eigenvalue(const Matrix& m, const FieldElement& lambda);

}  // namespace lced

#endif
