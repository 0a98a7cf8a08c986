#include "gsheaf/surface.hpp"

#include "gsheaf/error.hpp"

namespace gsheaf::geom {

namespace {

void require_integral(const Vector& v, const char* what) {
  for (const auto& x : v) {
    if (!x.is_integer()) throw MathError(std::string(what) + " must be integral");
  }
}

void check_class(const SurfaceModel& X, const SheafClass& F) {
  if (F.c1.size() != X.picard_rank()) throw MathError("class '" + F.label + "' has c1 of the wrong length");
  if (F.rank < 0) throw MathError("class '" + F.label + "' has negative rank");
}

Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(rows.size(), rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}

}  // namespace

void SurfaceModel::validate() const {
  const std::size_t p = intersection.rows();
  if (dim != 1 && dim != 2) throw MathError("only curves and surfaces are supported");
  if (p == 0 || intersection.cols() != p) throw MathError("intersection form must be a nonempty square matrix");
  if (!intersection.is_symmetric()) throw MathError("intersection form must be symmetric");
  for (std::size_t i = 0; i < p; ++i) require_integral(intersection.row(i), "intersection form");
  if (H.size() != p) throw MathError("polarization has the wrong length");
  require_integral(H, "polarization");
  if (dim == 2) {
    if (K.size() != p) throw MathError("canonical class has the wrong length");
    require_integral(K, "canonical class");
    if (intersect(*this, H, H).sign() <= 0) throw MathError("polarization must satisfy H² > 0");
  } else {
    if (p != 1) throw MathError("curve models carry a rank-1 degree lattice");
    if (H[0].sign() <= 0) throw MathError("polarization must have positive degree");
    if (genus < 0) throw MathError("genus must be nonnegative");
  }
}

SurfaceModel p2() {
  SurfaceModel X;
  X.intersection = from_ints({{1}});
  X.K = {Rational(-3)};
  X.H = {Rational(1)};
  return X;
}

SurfaceModel blowup_p2() {
  SurfaceModel X;
  X.intersection = from_ints({{-1, 1}, {1, 0}});
  X.K = {Rational(-2), Rational(-3)};
  X.H = {Rational(1), Rational(2)};
  return X;
}

SurfaceModel curve(long genus, long polarization_degree) {
  SurfaceModel X;
  X.dim = 1;
  X.intersection = from_ints({{1}});
  X.H = {Rational(polarization_degree)};
  X.chiO = Rational(1 - genus);
  X.genus = genus;
  X.validate();
  return X;
}

Rational intersect(const SurfaceModel& X, const Vector& a, const Vector& b) {
  if (a.size() != X.picard_rank() || b.size() != X.picard_rank()) throw MathError("divisor class has the wrong length");
  return dot(a, X.intersection.apply(b));
}

SheafClass line_bundle(const SurfaceModel& X, const Vector& c1, std::string label) {
  SheafClass L{1, c1, Rational(0), std::move(label)};
  check_class(X, L);
  if (X.dim == 2) L.ch2 = intersect(X, c1, c1) / Rational(2);
  return L;
}

SheafClass structure_sheaf(const SurfaceModel& X) {
  return line_bundle(X, zero_vector(X.picard_rank()), "O");
}

Poly hilbert_poly(const SurfaceModel& X, const SheafClass& F) {
  check_class(X, F);
  const Rational r(F.rank);
  if (X.dim == 1) {
    // χ(F(m)) = r·deg H·m + deg F + r(1 − g)
    return Poly({F.c1[0] + r * X.chiO, r * X.H[0]});
  }
  const Rational half(1, 2);
  const Rational hh = intersect(X, X.H, X.H);
  const Rational kh = intersect(X, X.K, X.H);
  return Poly({F.ch2 - half * intersect(X, X.K, F.c1) + r * X.chiO,
               intersect(X, F.c1, X.H) - half * r * kh,
               half * r * hh});
}

Rational degree(const SurfaceModel& X, const SheafClass& F) {
  check_class(X, F);
  if (X.dim == 1) return F.c1[0];
  return intersect(X, F.c1, X.H);
}

Rational slope(const SurfaceModel& X, const SheafClass& F) {
  if (F.rank == 0) throw MathError("slope of a rank-0 class is undefined");
  return degree(X, F) / Rational(F.rank);
}

SheafClass tensor_class(const SurfaceModel& X, const SheafClass& a, const SheafClass& b) {
  check_class(X, a);
  check_class(X, b);
  const Rational ra(a.rank), rb(b.rank);
  SheafClass out;
  out.rank = a.rank * b.rank;
  out.c1 = add(scaled(b.c1, ra), scaled(a.c1, rb));
  out.ch2 = ra * b.ch2 + rb * a.ch2 + (X.dim == 2 ? intersect(X, a.c1, b.c1) : Rational(0));
  out.label = a.label + "⊗" + b.label;
  return out;
}

SheafClass dual_class(const SheafClass& a) {
  return SheafClass{a.rank, scaled(a.c1, Rational(-1)), a.ch2, a.label + "^∨"};
}

SheafClass end0_class(const SurfaceModel& X, const SheafClass& a) {
  SheafClass out = tensor_class(X, a, dual_class(a));
  out.rank -= 1;
  out.label = "End⁰(" + a.label + ")";
  return out;
}

SheafClass point_twist(const SheafClass& a, long length) {
  if (length < 0) throw MathError("point length must be nonnegative");
  SheafClass out = a;
  out.ch2 -= Rational(length);
  if (length > 0) out.label = a.label + "⊗I_Z";
  return out;
}

SheafClass sum_class(const std::vector<SheafClass>& parts) {
  if (parts.empty()) throw MathError("sum of an empty list of classes");
  SheafClass out{0, zero_vector(parts.front().c1.size()), Rational(0), {}};
  for (const auto& p : parts) {
    if (p.c1.size() != out.c1.size()) throw MathError("classes live on different lattices");
    out.rank += p.rank;
    out.c1 = add(out.c1, p.c1);
    out.ch2 += p.ch2;
    out.label += out.label.empty() ? p.label : "⊕" + p.label;
  }
  return out;
}

SheafClass difference_class(const SheafClass& a, const SheafClass& b) {
  if (a.c1.size() != b.c1.size()) throw MathError("classes live on different lattices");
  if (b.rank > a.rank) throw MathError("difference of classes has negative rank");
  return SheafClass{a.rank - b.rank, sub(a.c1, b.c1), a.ch2 - b.ch2, a.label + "/" + b.label};
}

Rational c2_from_ch(const SurfaceModel& X, const SheafClass& F) {
  if (X.dim != 2) throw MathError("c2 is only defined on surfaces");
  check_class(X, F);
  return intersect(X, F.c1, F.c1) / Rational(2) - F.ch2;
}

Rational ch2_from_c2(const SurfaceModel& X, const Vector& c1, const Rational& c2) {
  if (X.dim != 2) throw MathError("c2 is only defined on surfaces");
  return intersect(X, c1, c1) / Rational(2) - c2;
}

long moduli_dim_gm(const SurfaceModel& X, long rank, const Vector& c1, const Rational& c2) {
  if (!(X == p2())) throw MathError("moduli dimension formula is only available on P²");
  if (rank != 2) throw MathError("moduli dimension formula is only available for rank 2");
  const Rational d = Rational(4) * c2 - intersect(X, c1, c1) - Rational(3);
  if (!d.is_integer()) throw MathError("non-integral Chern classes");
  return d.to_long();
}

long quot_dim(long rank, long length) {
  if (rank < 1 || length < 0) throw MathError("quot dimension needs rank ≥ 1 and length ≥ 0");
  return length * (rank + 1);
}

}  // namespace gsheaf::geom
