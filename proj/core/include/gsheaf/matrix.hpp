#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gsheaf/rational.hpp"

namespace gsheaf {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& a, const Rational& factor);
Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Rows may be empty, in which case `cols` fixes the width.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  /// Matrix-vector product A·x.
  Vector apply(const Vector& x) const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  Matrix reduced;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each kept row
};

EchelonForm row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : A·x = 0}, one vector per free column, in column order.
std::vector<Vector> null_space(const Matrix& a);

/// A particular solution of A·x = b with all free variables set to zero,
/// or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

/// Sylvester inertia of a symmetric matrix over the rationals.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};
Inertia inertia(const Matrix& symmetric);

}  // namespace gsheaf
