#include "gsheaf/lie_algebra.hpp"

#include <algorithm>

#include "gsheaf/error.hpp"

namespace gsheaf::lie {

namespace {

using SparseTable = std::vector<std::vector<std::pair<std::size_t, Rational>>>;

SparseTable to_sparse(std::size_t dim, const ConstantTable& table) {
  SparseTable sparse(dim * dim);
  for (const auto& [key, value] : table) {
    if (value.is_zero()) continue;
    const auto [l, m, n] = key;
    sparse[l * dim + m].emplace_back(n, value);
  }
  return sparse;
}

Vector sparse_bracket(std::size_t dim, const SparseTable& sparse, const Vector& x, const Vector& y) {
  Vector out(dim);
  for (std::size_t l = 0; l < dim; ++l) {
    if (x[l].is_zero()) continue;
    for (std::size_t m = 0; m < dim; ++m) {
      if (y[m].is_zero()) continue;
      const Rational xy = x[l] * y[m];
      for (const auto& [n, a] : sparse[l * dim + m]) out[n] += xy * a;
    }
  }
  return out;
}

std::vector<std::string> default_labels(std::size_t dim, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i));
  }
  if (labels.size() != dim) throw MathError("label count does not match dimension");
  return labels;
}

}  // namespace

bool check_jacobi(std::size_t dim, const ConstantTable& table) {
  const SparseTable sparse = to_sparse(dim, table);
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(unit_vector(dim, i));
  auto br = [&](const Vector& x, const Vector& y) { return sparse_bracket(dim, sparse, x, y); };
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t m = l + 1; m < dim; ++m) {
      for (std::size_t n = m + 1; n < dim; ++n) {
        const Vector j = add(add(br(br(basis[l], basis[m]), basis[n]), br(br(basis[m], basis[n]), basis[l])),
                             br(br(basis[n], basis[l]), basis[m]));
        if (!is_zero(j)) return false;
      }
    }
  }
  // Triples with a repeated index vanish by antisymmetry alone.
  return true;
}

LieAlgebra LieAlgebra::from_table(std::size_t dim, const ConstantTable& table, std::vector<std::string> labels) {
  if (dim == 0) throw MathError("Lie algebra dimension must be positive");
  for (const auto& [key, value] : table) {
    const auto [l, m, n] = key;
    if (l >= dim || m >= dim || n >= dim) throw MathError("structure constant index out of range");
    if (value.is_zero()) continue;
    if (l == m) throw MathError("antisymmetry violated: [e_l, e_l] must vanish");
    const auto partner = table.find({m, l, n});
    if (partner == table.end() || partner->second != -value) {
      throw MathError("antisymmetry violated at (" + std::to_string(l) + ", " + std::to_string(m) + ", " +
                      std::to_string(n) + ")");
    }
  }
  if (!check_jacobi(dim, table)) throw MathError("Jacobi identity fails");
  LieAlgebra g;
  g.dim_ = dim;
  g.labels_ = default_labels(dim, std::move(labels));
  g.table_ = to_sparse(dim, table);
  for (auto& entries : g.table_) std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      return a.first < b.first;
    });
  return g;
}

LieAlgebra LieAlgebra::from_upper(std::size_t dim, const std::vector<StructureConstant>& upper,
                                  std::vector<std::string> labels) {
  ConstantTable table;
  for (const auto& c : upper) {
    if (c.l >= c.m) throw MathError("structure constants must be listed with l < m");
    if (c.l >= dim || c.m >= dim || c.n >= dim) throw MathError("structure constant index out of range");
    if (table.count({c.l, c.m, c.n})) throw MathError("duplicate structure constant");
    if (c.value.is_zero()) continue;
    table[{c.l, c.m, c.n}] = c.value;
    table[{c.m, c.l, c.n}] = -c.value;
  }
  return from_table(dim, table, std::move(labels));
}

Rational LieAlgebra::constant(std::size_t l, std::size_t m, std::size_t n) const {
  for (const auto& [k, a] : table_.at(l * dim_ + m)) {
    if (k == n) return a;
  }
  return Rational(0);
}

std::vector<StructureConstant> LieAlgebra::upper_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t l = 0; l < dim_; ++l) {
    for (std::size_t m = l + 1; m < dim_; ++m) {
      for (const auto& [n, a] : table_[l * dim_ + m]) out.push_back({l, m, n, a});
    }
  }
  return out;
}

ConstantTable LieAlgebra::table() const {
  ConstantTable t;
  for (std::size_t l = 0; l < dim_; ++l) {
    for (std::size_t m = 0; m < dim_; ++m) {
      for (const auto& [n, a] : table_[l * dim_ + m]) t[{l, m, n}] = a;
    }
  }
  return t;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw MathError("dimension mismatch in bracket");
  return sparse_bracket(dim_, table_, x, y);
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != dim_) throw MathError("dimension mismatch in ad");
  Matrix m(dim_, dim_);
  for (std::size_t l = 0; l < dim_; ++l) {
    if (x[l].is_zero()) continue;
    for (std::size_t col = 0; col < dim_; ++col) {
      for (const auto& [n, a] : table_[l * dim_ + col]) m(n, col) += x[l] * a;
    }
  }
  return m;
}

Matrix killing_matrix(const LieAlgebra& g) {
  const std::size_t r = g.dim();
  std::vector<Matrix> ads;
  ads.reserve(r);
  for (std::size_t i = 0; i < r; ++i) ads.push_back(g.ad(g.basis_vector(i)));
  Matrix k(r, r);
  for (std::size_t l = 0; l < r; ++l) {
    for (std::size_t m = l; m < r; ++m) {
      Rational t;
      for (std::size_t p = 0; p < r; ++p) {
        for (std::size_t q = 0; q < r; ++q) {
          const Rational& a = ads[l](p, q);
          if (a.is_zero()) continue;
          const Rational& b = ads[m](q, p);
          if (!b.is_zero()) t += a * b;
        }
      }
      k(l, m) = t;
      k(m, l) = t;
    }
  }
  return k;
}

Rational killing(const LieAlgebra& g, const Vector& x, const Vector& y) {
  return dot(x, killing_matrix(g).apply(y));
}

bool is_semisimple(const LieAlgebra& g) { return !determinant(killing_matrix(g)).is_zero(); }

KillingInvariants killing_invariants(const LieAlgebra& g) {
  const Matrix k = killing_matrix(g);
  return {g.dim(), determinant(k), inertia(k)};
}

LieAlgebra sl(std::size_t n) {
  if (n < 2) throw MathError("sl(n) requires n >= 2");
  using Mat = std::vector<std::vector<Rational>>;
  auto zero = [&] { return Mat(n, std::vector<Rational>(n)); };
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Mat h = zero();
    h[k][k] = Rational(1);
    h[k + 1][k + 1] = Rational(-1);
    basis.push_back(h);
    labels.push_back(n == 2 ? "h" : "h" + std::to_string(k + 1));
  }
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) off.emplace_back(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) off.emplace_back(i, j);
  }
  for (const auto& [i, j] : off) {
    Mat e = zero();
    e[i][j] = Rational(1);
    basis.push_back(e);
    if (n == 2) {
      labels.push_back(i < j ? "e" : "f");
    } else {
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  const std::size_t dim = basis.size();

  auto commutator = [&](const Mat& x, const Mat& y) {
    Mat c = zero();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational acc;
        for (std::size_t k = 0; k < n; ++k) acc += x[i][k] * y[k][j] - y[i][k] * x[k][j];
        c[i][j] = acc;
      }
    }
    return c;
  };
  // Coordinates of a traceless matrix: H_k coefficient is the partial sum of the diagonal.
  auto coordinates = [&](const Mat& x) {
    Vector v(dim);
    Rational partial;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      partial += x[k][k];
      v[k] = partial;
    }
    for (std::size_t idx = 0; idx < off.size(); ++idx) v[n - 1 + idx] = x[off[idx].first][off[idx].second];
    return v;
  };

  ConstantTable table;
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t m = 0; m < dim; ++m) {
      if (l == m) continue;
      const Vector c = coordinates(commutator(basis[l], basis[m]));
      for (std::size_t k = 0; k < dim; ++k) {
        if (!c[k].is_zero()) table[{l, m, k}] = c[k];
      }
    }
  }
  return LieAlgebra::from_table(dim, table, labels);
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> off_diagonal_order(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) off.emplace_back(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) off.emplace_back(i, j);
  }
  return off;
}

}  // namespace

Vector sl_coordinates(const Matrix& x) {
  const std::size_t n = x.rows();
  if (n < 2 || x.cols() != n) throw MathError("sl(n) coordinates need a square matrix of size >= 2");
  if (!x.trace().is_zero()) throw MathError("matrix is not traceless");
  Vector v(n * n - 1);
  Rational partial;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    partial += x(k, k);
    v[k] = partial;
  }
  const auto off = off_diagonal_order(n);
  for (std::size_t idx = 0; idx < off.size(); ++idx) v[n - 1 + idx] = x(off[idx].first, off[idx].second);
  return v;
}

Matrix sl_matrix(std::size_t n, const Vector& v) {
  if (n < 2 || v.size() != n * n - 1) throw MathError("vector is not in sl(n) coordinates");
  Matrix x(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    x(k, k) += v[k];
    x(k + 1, k + 1) -= v[k];
  }
  const auto off = off_diagonal_order(n);
  for (std::size_t idx = 0; idx < off.size(); ++idx) x(off[idx].first, off[idx].second) = v[n - 1 + idx];
  return x;
}

LieAlgebra abelian(std::size_t dim) { return LieAlgebra::from_table(dim, {}); }

Subspace orthogonal_complement(const LieAlgebra& g, const Subspace& v) {
  const Matrix k = killing_matrix(g);
  if (determinant(k).is_zero()) throw MathError("orthogonal complement requires a semisimple algebra");
  if (v.is_zero()) return Subspace::whole(g.dim());
  std::vector<Vector> rows;
  for (const auto& b : v.basis()) rows.push_back(k.apply(b));  // κ symmetric: row b^T K
  return Subspace::span(g.dim(), null_space(Matrix::from_rows(rows, g.dim())));
}

Subspace centralizer(const LieAlgebra& g, const Vector& v) {
  return Subspace::span(g.dim(), null_space(g.ad(v)));
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> products;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) {
      Vector p = g.bracket(x, y);
      if (!is_zero(p)) products.push_back(std::move(p));
    }
  }
  return Subspace::span(g.dim(), products);
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) { return s.contains(bracket_span(g, s, s)); }

Subspace center_of(const LieAlgebra& g, const Subspace& s) {
  if (!is_subalgebra(g, s)) throw MathError("S is not a subalgebra");
  const std::size_t k = s.dim();
  if (k == 0) return s;
  // Unknown t: x = Σ t_i s_i with [x, s_j] = 0 for every j.
  Matrix m(k * g.dim(), k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Vector p = g.bracket(s.basis()[i], s.basis()[j]);
      for (std::size_t c = 0; c < g.dim(); ++c) m(j * g.dim() + c, i) = p[c];
    }
  }
  std::vector<Vector> center;
  for (const auto& t : null_space(m)) {
    Vector x(g.dim());
    for (std::size_t i = 0; i < k; ++i) x = add(x, scaled(s.basis()[i], t[i]));
    center.push_back(std::move(x));
  }
  return Subspace::span(g.dim(), center);
}

bool is_derivation(const LieAlgebra& g, const Matrix& f) {
  const std::size_t r = g.dim();
  if (f.rows() != r || f.cols() != r) throw MathError("derivation matrix has the wrong size");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < r; ++i) images.push_back(f.column(i));
  for (std::size_t l = 0; l < r; ++l) {
    for (std::size_t m = l + 1; m < r; ++m) {
      const Vector lhs = f.apply(g.bracket(g.basis_vector(l), g.basis_vector(m)));
      const Vector rhs = add(g.bracket(images[l], g.basis_vector(m)), g.bracket(g.basis_vector(l), images[m]));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Vector solve_inner_derivation(const LieAlgebra& g, const Matrix& f) {
  if (!is_derivation(g, f)) throw MathError("not a derivation");
  const std::size_t r = g.dim();
  // ad(v)_{n,m} = Σ_l v_l a_{lm}^n, one equation per matrix entry.
  Matrix system(r * r, r);
  Vector rhs(r * r);
  for (std::size_t l = 0; l < r; ++l) {
    for (std::size_t m = 0; m < r; ++m) {
      for (const auto& [n, a] : g.bracket_of_basis(l, m)) system(n * r + m, l) += a;
    }
  }
  for (std::size_t n = 0; n < r; ++n) {
    for (std::size_t m = 0; m < r; ++m) rhs[n * r + m] = f(n, m);
  }
  auto v = solve(system, rhs);
  if (!v) throw MathError("derivation is not inner");
  return *v;
}

}  // namespace gsheaf::lie
