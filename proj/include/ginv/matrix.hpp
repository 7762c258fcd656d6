#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "ginv/scalar.hpp"

namespace ginv {

// Dense row-major matrix over Q(i). Zero-extent shapes (n x 0, 0 x m) are
// allowed so that rank-0 factorizations have a representation.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  // Throws DimensionError unless entries.size() == rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  // Throws DimensionError on ragged input.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix columns(const std::vector<std::size_t>& which) const;
  Matrix top_rows(std::size_t count) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline Matrix adjoint(const Matrix& a) { return a.adjoint(); }

// Repeated squaring; pow(a, 0) is the identity. Throws DimensionError for
// non-square bases.
Matrix pow(const Matrix& a, unsigned exponent);

// [a | b] and [a ; b].
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

bool is_hermitian(const Matrix& a);
bool is_idempotent(const Matrix& a);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace ginv
