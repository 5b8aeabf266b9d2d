#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nabext/scalar.hpp"

namespace nabext {

/// Dense exact matrix, row-major. Column j is the image of basis vector j.
class Matrix {
public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar &at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  const Scalar &at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

  Vector apply(const Vector &x) const;
  Vector column(std::size_t c) const;
  bool is_zero() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix &a, const Matrix &b);
  friend Matrix operator-(const Matrix &a, const Matrix &b);
  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend bool operator==(const Matrix &a, const Matrix &b) = default;

private:
  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::size_t rank(Matrix m);

/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix &m, const Vector &b);

std::optional<Matrix> inverse(const Matrix &m);

} // namespace nabext
