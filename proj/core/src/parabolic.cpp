#include "gsheaf/parabolic.hpp"

#include <set>

#include "gsheaf/error.hpp"

namespace gsheaf::parab {

namespace {

Weight isqrt(Weight n) {
  Weight root = 0;
  while ((root + 1) * (root + 1) <= n) ++root;
  return root;
}

Matrix shifted(const Matrix& ad, Weight alpha) {
  Matrix m = ad;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= Rational(alpha);
  return m;
}

Subspace eigenspace(const lie::LieAlgebra& g, const Matrix& ad, Weight alpha) {
  return Subspace::span(g.dim(), null_space(shifted(ad, alpha)));
}

Subspace generalized_eigenspace(const lie::LieAlgebra& g, const Matrix& ad, Weight alpha) {
  const Matrix step = shifted(ad, alpha);
  Matrix power = step;
  for (std::size_t k = 1; k < g.dim(); ++k) power = power * step;
  return Subspace::span(g.dim(), null_space(power));
}

}  // namespace

Vector grading_element(const lie::LieAlgebra& g, const filt::WeightedFlag& flag) {
  const std::size_t r = g.dim();
  if (flag.ambient_dim() != r) throw MathError("flag does not live in the algebra");
  // A_{i-1} ad(x) v = λ_i A_{i-1} x, where A_{i-1} annihilates V_{λ_{i-1}}.
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < flag.length(); ++i) {
    const auto ann = flag.before(i).annihilator();
    const Rational lambda(flag.weights()[i]);
    for (const auto& x : flag.steps()[i].basis()) {
      const Matrix ad = g.ad(x);
      for (const auto& a : ann) {
        Vector row(r);
        for (std::size_t c = 0; c < r; ++c) {
          for (std::size_t n = 0; n < r; ++n) {
            if (!a[n].is_zero()) row[c] += a[n] * ad(n, c);
          }
        }
        rows.push_back(std::move(row));
        rhs.push_back(lambda * dot(a, x));
      }
    }
  }
  auto v = solve(Matrix::from_rows(rows, r), rhs);
  if (!v) throw MathError("flag admits no grading element");
  return *v;
}

ParabolicData parabolic_from_filtration(const lie::LieAlgebra& g, const filt::WeightedFlag& flag) {
  if (!lie::is_semisimple(g)) throw MathError("parabolic correspondence requires a semisimple algebra");
  if (!filt::is_balanced(flag)) throw MathError("flag is not balanced");
  if (!filt::is_algebra_filtration(g, flag)) throw MathError("flag is not an algebra filtration");
  const std::size_t r = g.dim();

  const Vector candidate = grading_element(g, flag);
  const Matrix ad = g.ad(candidate);

  // The solved element may carry a nilpotent part; its generalized
  // eigenspaces still split the flag, and the derivation acting by −λ_i on
  // them is the semisimple part, which is inner.
  ParabolicData out;
  std::vector<Vector> basis;
  std::vector<Rational> eigen;
  for (std::size_t i = 0; i < flag.length(); ++i) {
    const Weight alpha = -flag.weights()[i];
    const Subspace piece = generalized_eigenspace(g, ad, alpha);
    if (piece.dim() != flag.piece_dims()[i]) throw MathError("internal: grading element does not split the flag");
    for (const auto& b : piece.basis()) {
      basis.push_back(b);
      eigen.push_back(Rational(alpha));
    }
  }
  const Matrix b = Matrix::from_columns(basis, r);
  Matrix d(r, r);
  for (std::size_t i = 0; i < r; ++i) d(i, i) = eigen[i];
  const auto b_inv = inverse(b);
  if (!b_inv) throw MathError("internal: eigenspaces do not span the algebra");
  out.v = lie::solve_inner_derivation(g, b * d * *b_inv);
  const Matrix ad_v = g.ad(out.v);
  for (const Weight lambda : flag.weights()) out.eigengrading.emplace(-lambda, eigenspace(g, ad_v, -lambda));

  if (!out.eigengrading.count(0)) out.eigengrading.emplace(0, Subspace::zero(r));
  std::vector<Vector> nonneg;
  for (const auto& [alpha, space] : out.eigengrading) {
    if (alpha >= 0) nonneg.insert(nonneg.end(), space.basis().begin(), space.basis().end());
  }
  out.parabolic = Subspace::span(r, nonneg);
  for (const auto& row : out.parabolic.basis()) out.character.push_back(lie::killing(g, out.v, row));
  return out;
}

filt::WeightedFlag filtration_from_element(const lie::LieAlgebra& g, const Vector& v) {
  const std::size_t r = g.dim();
  if (v.size() != r) throw MathError("dimension mismatch in grading element");
  const Matrix ad = g.ad(v);
  const Rational norm = (ad * ad).trace();
  if (!norm.is_integer() || norm.sign() < 0) throw MathError("element not graded-integral");
  const Weight bound = isqrt(norm.to_long());

  std::map<Weight, Subspace> by_weight;  // −α ↦ g^α
  std::size_t total = 0;
  for (Weight alpha = -bound; alpha <= bound; ++alpha) {
    Subspace space = eigenspace(g, ad, alpha);
    if (space.is_zero()) continue;
    total += space.dim();
    by_weight.emplace(-alpha, std::move(space));
  }
  if (total != r) throw MathError("element not graded-integral");

  std::vector<Weight> weights;
  std::vector<Subspace> steps;
  Subspace acc = Subspace::zero(r);
  for (const auto& [w, space] : by_weight) {
    acc = sum(acc, space);
    weights.push_back(w);
    steps.push_back(acc);
  }
  return filt::WeightedFlag(std::move(weights), std::move(steps));
}

Vector killing_dual(const lie::LieAlgebra& g, const Subspace& q, const Vector& chi,
                    const std::optional<Subspace>& levi) {
  const std::size_t r = g.dim();
  if (q.ambient_dim() != r) throw MathError("subspace does not live in the algebra");
  if (chi.size() != q.dim()) throw MathError("character length does not match the parabolic");
  if (!lie::is_subalgebra(g, q)) throw MathError("q is not a subalgebra");
  const Subspace nilradical = lie::orthogonal_complement(g, q);
  if (!q.contains(nilradical)) throw MathError("q is not parabolic");

  // χ must vanish on [q, q]; express derived elements in q's echelon coordinates.
  const Subspace derived = lie::bracket_span(g, q, q);
  for (const auto& x : derived.basis()) {
    if (!dot(q.coordinates(x), chi).is_zero()) throw MathError("character not Killing-representable");
  }

  const Subspace l = levi ? *levi : echelon_complement(nilradical, q);
  if (!q.contains(l)) throw MathError("Levi factor is not inside q");
  const Matrix k = killing_matrix(g);
  const std::size_t n = l.dim();

  // Unknown t with v = Σ t_j l_j.
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < q.dim(); ++i) {
    const Vector kq = k.apply(q.basis()[i]);
    Vector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = dot(l.basis()[j], kq);
    rows.push_back(std::move(row));
    rhs.push_back(chi[i]);
  }
  if (levi) {
    for (const auto& y : l.basis()) {
      const Matrix ad_y = g.ad(y);
      for (std::size_t c = 0; c < r; ++c) {
        Vector row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = ad_y.apply(l.basis()[j])[c];
        rows.push_back(std::move(row));
        rhs.emplace_back(0);
      }
    }
  }
  const auto t = solve(Matrix::from_rows(rows, n), rhs);
  if (!t) throw MathError("character not Killing-representable");
  Vector v(r);
  for (std::size_t j = 0; j < n; ++j) v = add(v, scaled(l.basis()[j], (*t)[j]));
  return v;
}

bool roundtrip_check(const lie::LieAlgebra& g, const filt::WeightedFlag& flag) {
  const ParabolicData data = parabolic_from_filtration(g, flag);
  return filtration_from_element(g, data.v) == flag;
}

}  // namespace gsheaf::parab
