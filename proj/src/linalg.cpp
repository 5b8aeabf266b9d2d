#include "nabext/linalg.hpp"

#include <stdexcept>

namespace nabext {

namespace {

void require_same_shape(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix &m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero())
      ++sel;
    if (sel == m.rows())
      continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m.at(sel, c), m.at(row, c));
    Scalar inv = m.at(row, col).inverse();
    for (std::size_t c = 0; c < m.cols(); ++c)
      m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero())
        continue;
      Scalar factor = m.at(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c)
        m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = Scalar::one(f);
  return m;
}

Vector Matrix::apply(const Vector &x) const {
  if (x.size() != cols_)
    throw std::invalid_argument("matrix/vector dimension mismatch");
  Vector y = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!x[c].is_zero() && !at(r, c).is_zero())
        y[r] += at(r, c) * x[c];
  return y;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = at(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto &s : data_)
    if (!s.is_zero())
      return false;
  return true;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto &s : r.data_)
    s = -s;
  return r;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
  require_same_shape(a, b);
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i)
    r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix &a, const Matrix &b) { return a + (-b); }

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

std::size_t rank(Matrix m) { return row_reduce(m, m.cols()).size(); }

std::optional<Vector> solve(const Matrix &m, const Vector &b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("solve: right-hand side dimension mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto pivots = row_reduce(aug, m.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (!aug.at(r, m.cols()).is_zero())
      return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix &m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.field());
  }
  if (row_reduce(aug, n).size() != n)
    return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

} // namespace nabext
