#include "lced/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "lced/detail/charpoly.hpp"
#include "lced/detail/field_rep.hpp"

namespace lced {

Matrix Matrix::from_rows(Field f,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  for (const auto& row : rows)
    if (row.size() != c) throw ShapeMismatchError("ragged rows");
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.element(rows[i][j]);
  return m;
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::ones(Field f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (auto& e : m.e_) e = f.one();
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (field_ != o.field_) throw MixedFieldsError();
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatchError("add shapes");
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (field_ != o.field_) throw MixedFieldsError();
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatchError("sub shapes");
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw MixedFieldsError();
  if (cols_ != o.rows_) throw ShapeMismatchError("mul shapes");
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const FieldElement& a = at(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m.at(i, j) += a * o.at(l, j);
    }
  return m;
}

Matrix Matrix::operator*(const FieldElement& s) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (field_ != o.field_) throw MixedFieldsError();
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : e_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

FieldElement Matrix::row_sum(std::size_t i) const {
  FieldElement s = field_.zero();
  for (std::size_t j = 0; j < cols_; ++j) s += at(i, j);
  return s;
}

FieldElement Matrix::col_sum(std::size_t j) const {
  FieldElement s = field_.zero();
  for (std::size_t i = 0; i < rows_; ++i) s += at(i, j);
  return s;
}

FieldElement Matrix::entry_sum() const {
  FieldElement s = field_.zero();
  for (const auto& e : e_) s += e;
  return s;
}

FieldElement Matrix::trace() const {
  if (rows_ != cols_) throw ShapeMismatchError("trace of non-square matrix");
  FieldElement s = field_.zero();
  for (std::size_t i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (field_ != o.field_) throw MixedFieldsError();
  if (rows_ != o.rows_) throw ShapeMismatchError("hstack rows");
  Matrix m(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (field_ != o.field_) throw MixedFieldsError();
  if (cols_ != o.cols_) throw ShapeMismatchError("vstack cols");
  Matrix m(field_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
  return m;
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t r,
                     std::size_t c) const {
  if (i0 + r > rows_ || j0 + c > cols_) throw ShapeMismatchError("block bounds");
  Matrix m(field_, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
  return m;
}

Permutation::Permutation(std::size_t n) : img_(n) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(const std::vector<std::size_t>& images) {
  Permutation p(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j] < 1 || images[j] > images.size() || seen[images[j] - 1])
      throw Error("invalid permutation image list");
    seen[images[j] - 1] = true;
    p.img_[j] = static_cast<std::uint32_t>(images[j] - 1);
  }
  return p;
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw Error("invalid transposition");
  Permutation p(n);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::parse_cycles(std::size_t n, const std::string& text) {
  Permutation p(n);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text.compare(i, 2, "id") == 0) return p;
  std::vector<bool> used(n, false);
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') throw Error("bad cycle notation: " + text);
    ++i;
    std::vector<std::size_t> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t v = 0, start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (i == start) throw Error("bad cycle notation: " + text);
      if (v < 1 || v > n || used[v - 1])
        throw Error("bad cycle point in: " + text);
      used[v - 1] = true;
      cyc.push_back(v - 1);
    }
    for (std::size_t t = 0; t < cyc.size(); ++t)
      p.img_[cyc[t]] = static_cast<std::uint32_t>(cyc[(t + 1) % cyc.size()]);
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p(img_.size());
  for (std::size_t j = 0; j < img_.size(); ++j)
    p.img_[img_[j]] = static_cast<std::uint32_t>(j);
  return p;
}

Permutation Permutation::compose(const Permutation& tau) const {
  if (img_.size() != tau.img_.size()) throw ShapeMismatchError("compose sizes");
  Permutation p(img_.size());
  for (std::size_t j = 0; j < img_.size(); ++j) p.img_[j] = img_[tau.img_[j]];
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < img_.size(); ++j)
    if (img_[j] != j) return false;
  return true;
}

std::size_t Permutation::moved_points() const {
  std::size_t c = 0;
  for (std::size_t j = 0; j < img_.size(); ++j)
    if (img_[j] != j) ++c;
  return c;
}

std::string Permutation::cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::size_t j = 0; j < img_.size(); ++j) {
    if (seen[j] || img_[j] == j) continue;
    any = true;
    os << '(';
    std::size_t t = j;
    bool first = true;
    while (!seen[t]) {
      seen[t] = true;
      if (!first) os << ' ';
      os << t + 1;
      first = false;
      t = img_[t];
    }
    os << ')';
  }
  return any ? os.str() : "id";
}

std::vector<std::size_t> Permutation::images_1based() const {
  std::vector<std::size_t> v(img_.size());
  for (std::size_t j = 0; j < img_.size(); ++j) v[j] = img_[j] + 1;
  return v;
}

namespace {

struct Elim {
  Matrix r;
  Matrix e;  // row-op transform, tracked on demand
  std::vector<std::size_t> pivots;
  FieldElement det_acc;
  std::size_t rank = 0;
  Elim(Field f, const Matrix& m, bool want_e)
      : r(m), e(want_e ? Matrix::identity(f, m.rows()) : Matrix(f, 0, 0)),
        det_acc(f.one()) {}
};

Elim eliminate(const Matrix& m, bool want_e) {
  Field f = m.field();
  Elim el(f, m, want_e);
  Matrix& r = el.r;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t col = 0; col < cols && el.rank < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t i = el.rank; i < rows; ++i)
      if (!r.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != el.rank) {
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(r.at(sel, j), r.at(el.rank, j));
      if (want_e)
        for (std::size_t j = 0; j < rows; ++j)
          std::swap(el.e.at(sel, j), el.e.at(el.rank, j));
      el.det_acc = -el.det_acc;
    }
    FieldElement p = r.at(el.rank, col);
    el.det_acc *= p;
    FieldElement pi = p.inv();
    for (std::size_t j = col; j < cols; ++j) r.at(el.rank, j) *= pi;
    if (want_e)
      for (std::size_t j = 0; j < rows; ++j) el.e.at(el.rank, j) *= pi;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == el.rank) continue;
      FieldElement fct = r.at(i, col);
      if (fct.is_zero()) continue;
      for (std::size_t j = col; j < cols; ++j)
        r.at(i, j) -= fct * r.at(el.rank, j);
      if (want_e)
        for (std::size_t j = 0; j < rows; ++j)
          el.e.at(i, j) -= fct * el.e.at(el.rank, j);
    }
    el.pivots.push_back(col);
    ++el.rank;
  }
  return el;
}

}  // namespace

GaussResult gauss(const Matrix& m) {
  Elim el = eliminate(m, false);
  GaussResult res(m.field(), m.rows(), m.cols());
  res.rank = el.rank;
  res.rref = std::move(el.r);
  res.pivot_cols = std::move(el.pivots);
  if (m.rows() == m.cols())
    res.det = el.rank == m.rows() ? el.det_acc : m.field().zero();
  return res;
}

StandardForm standard_form(const Matrix& g) {
  const std::size_t k = g.rows(), n = g.cols();
  Elim el = eliminate(g, true);
  if (el.rank < k) throw RankDeficientError(el.rank);
  std::vector<std::size_t> images;
  images.reserve(n);
  for (auto c : el.pivots) images.push_back(c + 1);
  std::vector<bool> is_piv(n, false);
  for (auto c : el.pivots) is_piv[c] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_piv[c]) images.push_back(c + 1);
  Permutation sigma = Permutation::from_images(images);
  Matrix a(g.field(), k, n - k);
  for (std::size_t j = k; j < n; ++j)
    for (std::size_t i = 0; i < k; ++i)
      a.at(i, j - k) = el.r.at(i, images[j] - 1);
  return StandardForm{std::move(el.e), std::move(sigma), std::move(a)};
}

Matrix perm_matrix(const Permutation& sigma, Field f) {
  const std::size_t n = sigma.size();
  Matrix p(f, n, n);
  for (std::size_t j = 0; j < n; ++j) p.at(sigma.apply(j), j) = f.one();
  return p;
}

Polynomial char_poly(const Matrix& m) {
  if (m.rows() != m.cols())
    throw ShapeMismatchError("characteristic polynomial of non-square matrix");
  const std::size_t k = m.rows();
  Field f = m.field();
  const detail::FieldRep* rep = detail::rep_of(f);
  std::vector<std::uint64_t> codes(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) codes[i * k + j] = m.at(i, j).index();
  std::vector<std::uint64_t> out(k + 1);
  detail::CharPolyEngine<detail::FieldCodeOps> eng(detail::FieldCodeOps{rep});
  eng.run(codes.data(), k, out.data());
  std::vector<FieldElement> coeffs;
  coeffs.reserve(k + 1);
  for (auto c : out) coeffs.push_back(f.from_index(c));
  return Polynomial::from_elements(f, std::move(coeffs));
}

FieldElement minor_sum_delta(const Matrix& m, unsigned r) {
  if (m.rows() != m.cols()) throw ShapeMismatchError("principal minors need square");
  const std::size_t k = m.rows();
  if (k > 12 || r > k) throw BadRError("minor sum supports r <= k <= 12");
  Field f = m.field();
  if (r == 0) return f.one();
  const detail::FieldRep* rep = detail::rep_of(f);

  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::uint64_t> sub(r * r);
  std::uint64_t acc = 0;
  while (true) {
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        sub[a * r + b] = m.at(idx[a], idx[b]).index();
    // Determinant of the r x r block, in place.
    std::uint64_t det = 1;
    bool zero = false;
    for (std::size_t c = 0; c < r && !zero; ++c) {
      std::size_t sel = r;
      for (std::size_t i = c; i < r; ++i)
        if (sub[i * r + c] != 0) {
          sel = i;
          break;
        }
      if (sel == r) {
        zero = true;
        break;
      }
      if (sel != c) {
        for (std::size_t j = c; j < r; ++j)
          std::swap(sub[sel * r + j], sub[c * r + j]);
        det = rep->neg(det);
      }
      std::uint64_t piv = sub[c * r + c];
      det = rep->mul(det, piv);
      std::uint64_t pi = rep->inv(piv);
      for (std::size_t i = c + 1; i < r; ++i) {
        std::uint64_t fct = sub[i * r + c];
        if (fct == 0) continue;
        std::uint64_t fr = rep->mul(fct, pi);
        for (std::size_t j = c; j < r; ++j)
          sub[i * r + j] =
              rep->sub(sub[i * r + j], rep->mul(fr, sub[c * r + j]));
      }
    }
    if (!zero) acc = rep->add(acc, det);
    // Next r-combination of {0..k-1} in lexicographic order.
    std::size_t t = r;
    while (t > 0 && idx[t - 1] == k - r + t - 1) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t s = t; s < r; ++s) idx[s] = idx[s - 1] + 1;
  }
  return f.from_index(acc);
}

Polynomial perm_cycle_charpoly(const std::vector<std::size_t>& cycle_lengths,
                               std::size_t k, Field f) {
  std::size_t total = 0;
  for (auto l : cycle_lengths) {
    if (l == 0) throw BadShapeError("zero cycle length");
    total += l;
  }
  if (total > k) throw BadShapeError("cycle lengths exceed the point count");
  Polynomial acc = Polynomial::from_coeffs(f, {1});
  for (auto l : cycle_lengths) {
    Polynomial factor =
        Polynomial::monomial(f, l) - Polynomial::from_coeffs(f, {1});
    acc = acc * factor;
  }
  Polynomial xm1 = Polynomial::from_coeffs(f, {-1, 1});
  for (std::size_t i = 0; i < k - total; ++i) acc = acc * xm1;
  return acc;
}

bool has_eigenvalue(const Matrix& m, const FieldElement& lambda) {
  if (m.rows() != m.cols()) throw ShapeMismatchError("eigenvalue needs square");
  Matrix shifted = m - Matrix::identity(m.field(), m.rows()) * lambda;
  GaussResult g = gauss(shifted);
  return g.det.has_value() && g.det->is_zero();
}

}  // namespace lced
