#pragma once

#include <string>
#include <vector>

#include "gsheaf/matrix.hpp"
#include "gsheaf/poly.hpp"
#include "gsheaf/rational.hpp"

namespace gsheaf::geom {

/// Polarized smooth projective surface (dim 2) or curve (dim 1), known only
/// through its Picard lattice.
///
/// Curves use a rank-1 lattice with the degree pairing: c1 = [deg], H = [deg H],
/// and `genus` in place of K.
struct SurfaceModel {
  int dim = 2;
  Matrix intersection;
  Vector K;
  Vector H;
  Rational chiO{1};
  long genus = 0;

  std::size_t picard_rank() const { return intersection.rows(); }

  /// Throws MathError on a non-symmetric or non-integral form, bad vector
  /// lengths, or a non-ample polarization (H² ≤ 0, deg H ≤ 0 on curves).
  void validate() const;

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

SurfaceModel p2();
/// Basis (D, R): exceptional divisor and fiber class of the ruling.
SurfaceModel blowup_p2();
SurfaceModel curve(long genus, long polarization_degree);

/// Numerical class (rank, c1, ch2). Rank 0 is allowed for torsion
/// corrections such as point classes.
struct SheafClass {
  long rank = 0;
  Vector c1;
  Rational ch2;
  std::string label;

  friend bool operator==(const SheafClass& a, const SheafClass& b) {
    return a.rank == b.rank && a.c1 == b.c1 && a.ch2 == b.ch2;
  }
};

Rational intersect(const SurfaceModel& X, const Vector& a, const Vector& b);

SheafClass line_bundle(const SurfaceModel& X, const Vector& c1, std::string label = {});
SheafClass structure_sheaf(const SurfaceModel& X);

Poly hilbert_poly(const SurfaceModel& X, const SheafClass& F);
Rational degree(const SurfaceModel& X, const SheafClass& F);
/// Throws MathError for rank 0.
Rational slope(const SurfaceModel& X, const SheafClass& F);

SheafClass tensor_class(const SurfaceModel& X, const SheafClass& a, const SheafClass& b);
SheafClass dual_class(const SheafClass& a);
/// ch(a)·ch(a^∨) − 1 = (r² − 1, 0, 2r·ch2 − c1²).
SheafClass end0_class(const SurfaceModel& X, const SheafClass& a);
/// Twist by an ideal of ℓ reduced points: ch2 − ℓ.
SheafClass point_twist(const SheafClass& a, long length);
SheafClass sum_class(const std::vector<SheafClass>& parts);
SheafClass difference_class(const SheafClass& a, const SheafClass& b);

/// c2 = c1²/2 − ch2 (surfaces only).
Rational c2_from_ch(const SurfaceModel& X, const SheafClass& F);
Rational ch2_from_c2(const SurfaceModel& X, const Vector& c1, const Rational& c2);

/// Dimension 4c2 − c1² − 3 of the Gieseker moduli of rank-2 sheaves on P².
/// Throws MathError for any other surface or rank.
long moduli_dim_gm(const SurfaceModel& X, long rank, const Vector& c1, const Rational& c2);
/// ℓ(r + 1) for quotients of a rank-r bundle onto ℓ distinct reduced points.
long quot_dim(long rank, long length);

}  // namespace gsheaf::geom
