#include "gsheaf/subspace.hpp"

#include <algorithm>

#include "gsheaf/error.hpp"

namespace gsheaf {

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s;
  s.ambient_ = ambient;
  if (vectors.empty()) return s;
  EchelonForm ef = row_reduce(Matrix::from_rows(vectors, ambient));
  for (std::size_t r = 0; r < ef.pivots.size(); ++r) s.basis_.push_back(ef.reduced.row(r));
  s.pivots_ = std::move(ef.pivots);
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw MathError("dimension mismatch in subspace membership");
  Vector rest = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rational f = rest[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = pivots_[r]; c < ambient_; ++c) {
      if (!basis_[r][c].is_zero()) rest[c] -= f * basis_[r][c];
    }
  }
  return gsheaf::is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw MathError("dimension mismatch in subspace containment");
  if (other.dim() > dim()) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw MathError("vector is not in the subspace");
  Vector c(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

std::vector<Vector> Subspace::annihilator() const {
  if (basis_.empty()) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < ambient_; ++i) rows.push_back(unit_vector(ambient_, i));
    return rows;
  }
  return null_space(Matrix::from_rows(basis_, ambient_));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw MathError("dimension mismatch in subspace sum");
  std::vector<Vector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), rows);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw MathError("dimension mismatch in subspace intersection");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
  const std::vector<Vector> ann = b.annihilator();
  if (ann.empty()) return a;
  // Solve ann · (Σ t_i a_i) = 0 for t.
  Matrix m(ann.size(), a.dim());
  for (std::size_t r = 0; r < ann.size(); ++r) {
    for (std::size_t i = 0; i < a.dim(); ++i) m(r, i) = dot(ann[r], a.basis()[i]);
  }
  std::vector<Vector> vectors;
  for (const auto& t : null_space(m)) {
    Vector x(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!t[i].is_zero()) x = add(x, scaled(a.basis()[i], t[i]));
    }
    vectors.push_back(std::move(x));
  }
  return Subspace::span(n, vectors);
}

Subspace echelon_complement(const Subspace& sub, const Subspace& super) {
  if (!super.contains(sub)) throw MathError("echelon complement requires nested subspaces");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < super.dim(); ++r) {
    const std::size_t p = super.pivots()[r];
    if (std::find(sub.pivots().begin(), sub.pivots().end(), p) == sub.pivots().end()) {
      rows.push_back(super.basis()[r]);
    }
  }
  return Subspace::span(super.ambient_dim(), rows);
}

}  // namespace gsheaf
