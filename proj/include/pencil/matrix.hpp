#pragma once

#include <cstddef>
#include <vector>

#include "pencil/rational.hpp"

namespace pencil {

// Dense row-major matrix over Q. Zero rows or zero columns are allowed.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(size_t n);
  static Matrix from_ints(const std::vector<std::vector<long>>& rows, size_t cols_if_empty = 0);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Rank over Q.
size_t matrix_rank(const Matrix& m);
Rational determinant(const Matrix& m);

// Dense integer matrix used by the rank kernels. Row-major.
struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<long long> data;
  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0) {}
  long long& operator()(size_t i, size_t j) { return data[i * cols + j]; }
  long long operator()(size_t i, size_t j) const { return data[i * cols + j]; }
};

// Exact rank of an integer matrix. Uses elimination modulo enough primes
// to exceed the Hadamard bound, falling back to Bareiss over Z.
size_t integer_rank(const IntMatrix& m);
// Exact determinant of a square integer matrix.
Integer integer_determinant(const IntMatrix& m);

// Scale each row by the lcm of its denominators. Returns false if some
// entry does not fit in 62 bits.
bool to_integer_rows(const Matrix& m, IntMatrix& out);

}  // namespace pencil
