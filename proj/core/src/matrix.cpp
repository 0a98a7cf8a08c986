#include "gsheaf/matrix.hpp"

#include <cassert>
#include <utility>

#include "gsheaf/error.hpp"

namespace gsheaf {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n);
  v.at(index) = Rational(1);
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scaled(const Vector& a, const Rational& factor) {
  Vector out(a);
  for (auto& x : out) x *= factor;
  return out;
}

Rational dot(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw MathError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw MathError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
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
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw MathError("dimension mismatch in matrix-vector product");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero() && !x[c].is_zero()) acc += a * x[c];
    }
    y[r] = std::move(acc);
  }
  return y;
}

Rational Matrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw MathError("dimension mismatch in matrix product");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MathError("dimension mismatch in matrix sum");
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MathError("dimension mismatch in matrix difference");
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

EchelonForm row_reduce(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(lead, k));
    }
    const Rational inv = Rational(1) / m(lead, c);
    for (std::size_t k = c; k < cols; ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!m(lead, k).is_zero()) m(r, k) -= f * m(lead, k);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix reduced(lead, cols);
  for (std::size_t r = 0; r < lead; ++r) {
    for (std::size_t c = 0; c < cols; ++c) reduced(r, c) = m(r, c);
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> null_space(const Matrix& a) {
  const EchelonForm ef = row_reduce(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = Rational(1);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw MathError("dimension mismatch in linear solve");
  Matrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    augmented(r, a.cols()) = b[r];
  }
  const EchelonForm ef = row_reduce(std::move(augmented));
  if (!ef.pivots.empty() && ef.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t r = 0; r < ef.pivots.size(); ++r) x[ef.pivots[r]] = ef.reduced(r, a.cols());
  return x;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw MathError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = Rational(1) / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Rational f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) {
        if (!m(c, k).is_zero()) m(r, k) -= f * m(c, k);
      }
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw MathError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = Rational(1);
  }
  const EchelonForm ef = row_reduce(std::move(augmented));
  if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  }
  return inv;
}

Inertia inertia(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) throw MathError("inertia of a non-symmetric matrix");
  Matrix a = symmetric;
  const std::size_t n = a.rows();
  Inertia result;
  // Congruence diagonalization: row and column operations in lockstep.
  auto add_multiple = [&](std::size_t target, std::size_t source, const Rational& f) {
    for (std::size_t k = 0; k < n; ++k) a(target, k) += f * a(source, k);
    for (std::size_t k = 0; k < n; ++k) a(k, target) += f * a(k, source);
  };
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a(j, j).is_zero()) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        std::size_t off = k + 1;
        while (off < n && a(k, off).is_zero()) ++off;
        if (off == n) {
          ++result.zero;
          continue;
        }
        add_multiple(k, off, Rational(1));
      }
    }
    const Rational pivot = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      add_multiple(r, k, -(a(r, k) / pivot));
    }
    (pivot.sign() > 0 ? result.positive : result.negative) += 1;
  }
  return result;
}

}  // namespace gsheaf
