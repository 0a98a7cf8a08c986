#pragma once

#include <cstddef>
#include <vector>

#include "gsheaf/matrix.hpp"

namespace gsheaf {

/// Linear subspace of Q^n, stored as the rows of its reduced row echelon
/// form. The echelon matrix is canonical, so equality is structural.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace whole(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_whole() const { return basis_.size() == ambient_; }

  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;

  /// Rows {y} with y·x = 0 exactly on this subspace.
  std::vector<Vector> annihilator() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// Complement of `sub` inside `super` spanned by the echelon rows of `super`
/// whose pivots are not pivots of `sub`. Requires sub ⊆ super.
Subspace echelon_complement(const Subspace& sub, const Subspace& super);

}  // namespace gsheaf
