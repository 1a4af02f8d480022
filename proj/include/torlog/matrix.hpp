#ifndef TORLOG_MATRIX_HPP
#define TORLOG_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "torlog/scalar.hpp"

namespace torlog {

/// Dense row-major matrix of exact rationals. Zero-sized dimensions are
/// allowed everywhere and behave as the zero map between trivial spaces.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Rows of equal length; an empty list gives the 0x0 matrix.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Scalar>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  /// Copy of the block with top-left corner (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Block-diagonal sum a ⊕ b.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// [a, b] = ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace torlog

#endif  // TORLOG_MATRIX_HPP
