#pragma once

#include "coxinv/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace coxinv {

using Vector = std::vector<Scalar>;

Scalar dot(const Vector& x, const Vector& y);
Vector add(const Vector& x, const Vector& y);
Vector sub(const Vector& x, const Vector& y);
Vector scale(const Scalar& c, const Vector& x);
bool is_zero(const Vector& x);
// Sign of the first nonzero entry; 0 for the zero vector.
int lex_sign(const Vector& x);
std::string to_string(const Vector& x);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& cols);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend bool operator==(const Matrix& x, const Matrix& y) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Gauss-Jordan; pivot = first nonzero entry scanning the column downwards.
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace coxinv
