#include "coxinv/matrix.hpp"

#include <stdexcept>

namespace coxinv {

namespace {

void require_same_size(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
}

}  // namespace

Scalar dot(const Vector& x, const Vector& y) {
  require_same_size(x, y);
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
  }
  return s;
}

Vector add(const Vector& x, const Vector& y) {
  require_same_size(x, y);
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Vector sub(const Vector& x, const Vector& y) {
  require_same_size(x, y);
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& x) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

bool is_zero(const Vector& x) {
  for (const auto& v : x) {
    if (!v.is_zero()) return false;
  }
  return true;
}

int lex_sign(const Vector& x) {
  for (const auto& v : x) {
    if (int s = v.sign(); s != 0) return s;
  }
  return 0;
}

std::string to_string(const Vector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += x[i].to_string();
  }
  return s + ")";
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  if (cols.empty()) return Matrix();
  Matrix m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows_) throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix r = x;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += y.data_[i];
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix r = x;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= y.data_[i];
  return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product size mismatch");
  Matrix r(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Scalar& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        if (!y(k, j).is_zero()) r(i, j) += a * y(k, j);
      }
    }
  return r;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols_ != v.size()) throw std::invalid_argument("matrix-vector size mismatch");
  Vector r(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t k = 0; k < m.cols_; ++k) {
      if (!m(i, k).is_zero() && !v[k].is_zero()) r[i] += m(i, k) * v[k];
    }
  return r;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead, j));
    Scalar inv = Scalar(1) / m(lead, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      Scalar f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(lead, j).is_zero()) m(r, j) -= f * m(lead, j);
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

}  // namespace coxinv
