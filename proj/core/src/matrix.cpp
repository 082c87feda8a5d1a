#include "superforms/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace superforms {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.cols() > 0 && p.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    cols += p.cols();
  }
  Matrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t c = 0; c < p.cols(); ++c) out(r, offset + c) = p(r, c);
    offset += p.cols();
  }
  return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.rows() > 0 && p.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += p.rows();
  }
  Matrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t c = 0; c < p.cols(); ++c) out(offset + r, c) = p(r, c);
    offset += p.rows();
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_real() const {
  for (const auto& x : data_)
    if (!x.is_real()) return false;
  return true;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& x = (*this)(r, c);
      if (!x.is_zero()) out(c, r) = x.conj();
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::col(std::size_t c) const { return cols_range(c, 1); }

Matrix Matrix::cols_range(std::size_t first, std::size_t count) const {
  Matrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

std::vector<Scalar> Matrix::col_vector(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  if (s.is_one()) return *this;
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!data_[k].is_zero()) out.data_[k] = -data_[k];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(a.rows_, b.cols_);
  // operators here are very sparse; skip zero entries of a
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out(i, j).add_product(x, y);
      }
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::kron(const Matrix& outer, const Matrix& inner) {
  Matrix out(outer.rows_ * inner.rows_, outer.cols_ * inner.cols_);
  for (std::size_t a = 0; a < outer.rows_; ++a)
    for (std::size_t b = 0; b < outer.cols_; ++b) {
      const Scalar& x = outer(a, b);
      if (x.is_zero()) continue;
      for (std::size_t i = 0; i < inner.rows_; ++i)
        for (std::size_t j = 0; j < inner.cols_; ++j) {
          const Scalar& y = inner(i, j);
          if (!y.is_zero()) out(a * inner.rows_ + i, b * inner.cols_ + j) = x * y;
        }
    }
  return out;
}

std::optional<EntryMismatch> first_mismatch(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("first_mismatch: shape mismatch");
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return EntryMismatch{r, c, a(r, c), b(r, c)};
  return std::nullopt;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Scalar inv = m(row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      Scalar f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return rref(m).pivots.size();
}

Matrix nullspace(const Matrix& m) {
  if (m.cols() == 0) return Matrix(0, 0);
  if (m.rows() == 0) return Matrix::identity(m.cols());
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis(f, k) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.reduced(r, f).is_zero()) basis(e.pivots[r], k) = -e.reduced(r, f);
  }
  return basis;
}

Matrix canonical_basis(const Matrix& columns) {
  if (columns.cols() == 0 || columns.rows() == 0) return Matrix(columns.rows(), 0);
  RowEchelon e = rref(columns.transpose());
  Matrix out(columns.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t r = 0; r < columns.rows(); ++r) out(r, k) = e.reduced(k, r);
  return out;
}

Matrix column_space(const Matrix& m) { return canonical_basis(m); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  Matrix aug = Matrix::hstack({a, b}, a.rows());
  RowEchelon e = rref(aug);
  Matrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::size_t p = e.pivots[r];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = e.reduced(r, a.cols() + j);
  }
  return x;
}

bool in_span(const Matrix& basis, const Matrix& vectors) {
  if (vectors.cols() == 0) return true;
  if (basis.cols() == 0) return vectors.is_zero();
  return solve(basis, vectors).has_value();
}

bool same_span(const Matrix& a, const Matrix& b) {
  return canonical_basis(a) == canonical_basis(b);
}

Matrix intersect_spans(const Matrix& a, const Matrix& b) {
  std::size_t n = a.rows() ? a.rows() : b.rows();
  if (a.cols() == 0 || b.cols() == 0) return Matrix(n, 0);
  // a x = b y  <=>  [a | -b] (x; y) = 0
  Matrix k = nullspace(Matrix::hstack({a, -b}, n));
  Matrix xs(a.cols(), k.cols());
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t c = 0; c < k.cols(); ++c) xs(r, c) = k(r, c);
  return canonical_basis(a * xs);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows()));
}

bool is_hermitian(const Matrix& m) { return m.rows() == m.cols() && m == m.adjoint(); }

bool is_positive_semidefinite(const Matrix& m0) {
  if (!is_hermitian(m0)) return false;
  Matrix m = m0;
  std::size_t n = m.rows();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      if (sgn(m(k, k).re()) < 0) return false;
      if (p == n && sgn(m(k, k).re()) > 0) p = k;
    }
    if (p == n) {
      // remaining diagonal is zero, so every remaining entry must vanish
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (!done[r] && !done[c] && !m(r, c).is_zero()) return false;
      return true;
    }
    done[p] = true;
    Scalar inv = m(p, p).inverse();
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || m(r, p).is_zero()) continue;
      Scalar f = m(r, p) * inv;
      for (std::size_t c = 0; c < n; ++c)
        if (!done[c] && !m(p, c).is_zero()) m(r, c) -= f * m(p, c);
    }
  }
  return true;
}

}  // namespace superforms
