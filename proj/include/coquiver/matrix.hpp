#ifndef COQUIVER_MATRIX_HPP
#define COQUIVER_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coquiver/scalar.hpp"

namespace coquiver {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars. Indices are 0-based.
///
/// Linear maps act on column vectors: a map V -> W of dimensions n -> m is an
/// m x n matrix. Tensor coordinates are flattened row-major: the basis vector
/// a (x) b of V (x) W has index a * dim W + b.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix hstack(const Matrix& left, const Matrix& right);

  /// The same entries interpreted in another field.
  Matrix in(Field f) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;                    // nonzero rows only
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form; the zero rows are dropped.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Kronecker product: (a (x) b)[i*rb + k][j*cb + l] = a[i][j] * b[k][l].
Matrix tensor(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix; throws if singular.
Matrix inverse(const Matrix& m);

/// Some solution x of m * x = rhs, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const Scalar& s);
bool is_zero(const Vector& v);
Vector unit_vector(std::size_t n, std::size_t i);
/// Flattened tensor product of coordinate vectors.
Vector tensor(const Vector& a, const Vector& b);
Scalar dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

}  // namespace coquiver

#endif
