#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gsheaf/matrix.hpp"
#include "gsheaf/subspace.hpp"

namespace gsheaf::lie {

/// One structure constant a_{lm}^n of [e_l, e_m] = Σ_n a_{lm}^n e_n.
struct StructureConstant {
  std::size_t l = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  Rational value;
  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// Full table keyed by (l, m, n); both orderings of (l, m) are expected.
using ConstantTable = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational>;

/// True iff J(e_l, e_m, e_n) = 0 for every basis triple.
/// The table must already be antisymmetric.
bool check_jacobi(std::size_t dim, const ConstantTable& table);

/// Finite-dimensional Lie algebra over Q given by structure constants.
///
/// Construction validates antisymmetry and the Jacobi identity and throws
/// MathError otherwise, so every LieAlgebra value is a legal Lie algebra.
class LieAlgebra {
 public:
  /// Full table: every nonzero a_{lm}^n must have its partner a_{ml}^n = -a_{lm}^n.
  static LieAlgebra from_table(std::size_t dim, const ConstantTable& table,
                               std::vector<std::string> labels = {});

  /// File-format constructor: only entries with l < m, partners implied.
  static LieAlgebra from_upper(std::size_t dim, const std::vector<StructureConstant>& upper,
                               std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Rational constant(std::size_t l, std::size_t m, std::size_t n) const;

  /// Nonzero entries of [e_l, e_m] as (n, a_{lm}^n).
  const std::vector<std::pair<std::size_t, Rational>>& bracket_of_basis(std::size_t l, std::size_t m) const {
    return table_[l * dim_ + m];
  }

  /// Entries with l < m in (l, m, n) order.
  std::vector<StructureConstant> upper_constants() const;
  ConstantTable table() const;

  Vector bracket(const Vector& x, const Vector& y) const;

  /// Matrix of ad(x) acting on coordinate column vectors.
  Matrix ad(const Vector& x) const;

  Vector basis_vector(std::size_t i) const { return unit_vector(dim_, i); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  LieAlgebra() = default;

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table_;
};

/// κ_{lm} = trace(ad e_l ∘ ad e_m).
Matrix killing_matrix(const LieAlgebra& g);
Rational killing(const LieAlgebra& g, const Vector& x, const Vector& y);
bool is_semisimple(const LieAlgebra& g);

/// Basis-dependent invariants used as a necessary condition for isomorphism.
struct KillingInvariants {
  std::size_t dim = 0;
  Rational det;
  Inertia signature;
  friend bool operator==(const KillingInvariants&, const KillingInvariants&) = default;
};
KillingInvariants killing_invariants(const LieAlgebra& g);

/// sl(n) in the basis H_1..H_{n-1}, E_ij (i<j), E_ij (i>j).
/// For n = 2 this is (h, e, f).
LieAlgebra sl(std::size_t n);
/// Coordinates of a traceless n×n matrix in the sl(n) basis, and back.
Vector sl_coordinates(const Matrix& x);
Matrix sl_matrix(std::size_t n, const Vector& v);
LieAlgebra abelian(std::size_t dim);

Subspace orthogonal_complement(const LieAlgebra& g, const Subspace& v);
Subspace centralizer(const LieAlgebra& g, const Vector& v);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
Subspace center_of(const LieAlgebra& g, const Subspace& s);

/// span{[a, b] : a ∈ A, b ∈ B}
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

/// f[x, y] = [fx, y] + [x, fy] on all basis pairs.
bool is_derivation(const LieAlgebra& g, const Matrix& f);

/// The v with ad(v) = f. Throws "not a derivation" when f fails Leibniz,
/// "derivation is not inner" when the linear system is inconsistent.
Vector solve_inner_derivation(const LieAlgebra& g, const Matrix& f);

}  // namespace gsheaf::lie
