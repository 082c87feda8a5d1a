#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superforms/scalar.hpp"

namespace superforms {

// Dense exact matrix over the Gaussian rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix column(const std::vector<Scalar>& v);
  // Columns concatenated left to right; all inputs need the same row count.
  static Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows);
  static Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_real() const;
  Matrix adjoint() const;  // conjugate transpose
  Matrix transpose() const;
  Matrix col(std::size_t c) const;
  Matrix cols_range(std::size_t first, std::size_t count) const;
  std::vector<Scalar> col_vector(std::size_t c) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // Kronecker product: (outer (x) inner), row index = outer_row * inner.rows() + inner_row.
  static Matrix kron(const Matrix& outer, const Matrix& inner);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct EntryMismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  Scalar left;
  Scalar right;
};

std::optional<EntryMismatch> first_mismatch(const Matrix& a, const Matrix& b);

// Exact Gaussian elimination utilities. Every basis returned is in reduced
// (canonical) form so results are independent of elimination order.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
Matrix nullspace(const Matrix& m);       // columns form a basis of ker m
Matrix column_space(const Matrix& m);    // columns form a canonical basis of im m
Matrix canonical_basis(const Matrix& columns);  // same span, reduced column echelon form
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);  // some X with a X = b
bool in_span(const Matrix& basis, const Matrix& vectors);
bool same_span(const Matrix& a, const Matrix& b);
Matrix intersect_spans(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

// Exact test for a Hermitian matrix being positive semidefinite.
bool is_hermitian(const Matrix& m);
bool is_positive_semidefinite(const Matrix& m);

}  // namespace superforms
