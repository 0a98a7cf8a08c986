#include "gsheaf/flag.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <string>

#include "gsheaf/error.hpp"

namespace gsheaf::filt {

WeightedFlag::WeightedFlag(std::vector<Weight> weights, std::vector<Subspace> steps)
    : weights_(std::move(weights)), steps_(std::move(steps)) {
  if (steps_.empty()) throw MathError("flag needs at least one step");
  if (weights_.size() != steps_.size()) throw MathError("flag weight count does not match step count");
  const std::size_t n = steps_.back().ambient_dim();
  if (!steps_.back().is_whole()) throw MathError("last flag step must be the whole space");
  if (steps_.front().is_zero()) throw MathError("first flag step must be nonzero");
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].ambient_dim() != n) throw MathError("flag steps live in different ambient spaces");
    if (i == 0) continue;
    if (weights_[i] <= weights_[i - 1]) throw MathError("flag weights must be strictly increasing");
    if (steps_[i].dim() <= steps_[i - 1].dim() || !steps_[i].contains(steps_[i - 1])) {
      throw MathError("flag steps must be strictly nested");
    }
  }
}

WeightedFlag WeightedFlag::trivial(std::size_t ambient) { return WeightedFlag({0}, {Subspace::whole(ambient)}); }

Subspace WeightedFlag::at(Weight m) const {
  const auto it = std::upper_bound(weights_.begin(), weights_.end(), m);
  if (it == weights_.begin()) return Subspace::zero(ambient_dim());
  return steps_[static_cast<std::size_t>(it - weights_.begin()) - 1];
}

Subspace WeightedFlag::before(std::size_t i) const {
  return i == 0 ? Subspace::zero(ambient_dim()) : steps_.at(i - 1);
}

std::vector<std::size_t> WeightedFlag::piece_dims() const {
  std::vector<std::size_t> dims;
  std::size_t prev = 0;
  for (const auto& s : steps_) {
    dims.push_back(s.dim() - prev);
    prev = s.dim();
  }
  return dims;
}

WeightedFlag WeightedFlag::scaled(Weight factor) const {
  if (factor <= 0) throw MathError("weight scaling factor must be positive");
  std::vector<Weight> w = weights_;
  for (auto& x : w) x *= factor;
  return WeightedFlag(std::move(w), steps_);
}

WeightedFlag WeightedFlag::shifted(Weight offset) const {
  std::vector<Weight> w = weights_;
  for (auto& x : w) x += offset;
  return WeightedFlag(std::move(w), steps_);
}

GradedSplitting::GradedSplitting(WeightedFlag flag, std::vector<Subspace> pieces)
    : flag_(std::move(flag)), pieces_(std::move(pieces)) {
  if (pieces_.size() != flag_.length()) throw MathError("splitting has the wrong number of pieces");
  const auto dims = flag_.piece_dims();
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Subspace& step = flag_.steps()[i];
    if (pieces_[i].dim() != dims[i] || !step.contains(pieces_[i]) ||
        !(sum(flag_.before(i), pieces_[i]) == step)) {
      throw MathError("splitting piece " + std::to_string(i) + " does not complement its step");
    }
  }
}

GradedSplitting GradedSplitting::echelon(const WeightedFlag& flag) {
  std::vector<Subspace> pieces;
  for (std::size_t i = 0; i < flag.length(); ++i) pieces.push_back(echelon_complement(flag.before(i), flag.steps()[i]));
  return GradedSplitting(flag, std::move(pieces));
}

std::vector<Vector> GradedSplitting::adapted_basis() const {
  std::vector<Vector> basis;
  for (const auto& p : pieces_) basis.insert(basis.end(), p.basis().begin(), p.basis().end());
  const std::size_t n = flag_.ambient_dim();
  const Rational det = determinant(Matrix::from_rows(basis, n));
  basis.back() = scaled(basis.back(), Rational(1) / det);
  return basis;
}

std::vector<Weight> GradedSplitting::adapted_weights() const {
  std::vector<Weight> w;
  for (std::size_t i = 0; i < pieces_.size(); ++i) w.insert(w.end(), pieces_[i].dim(), flag_.weights()[i]);
  return w;
}

bool is_balanced(const WeightedFlag& flag) {
  const auto dims = flag.piece_dims();
  Weight total = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) total += flag.weights()[i] * static_cast<Weight>(dims[i]);
  return total == 0;
}

bool is_algebra_filtration(const lie::LieAlgebra& g, const WeightedFlag& flag) {
  if (flag.ambient_dim() != g.dim()) throw MathError("flag does not live in the algebra");
  const auto& w = flag.weights();
  for (std::size_t i = 0; i < flag.length(); ++i) {
    for (std::size_t j = i; j < flag.length(); ++j) {
      const Subspace target = flag.at(w[i] + w[j]);
      if (!target.contains(bracket_span(g, flag.steps()[i], flag.steps()[j]))) return false;
    }
  }
  return true;
}

bool is_orthogonal_filtration(const lie::LieAlgebra& g, const WeightedFlag& flag) {
  if (flag.ambient_dim() != g.dim()) throw MathError("flag does not live in the algebra");
  if (!lie::is_semisimple(g)) throw MathError("orthogonal filtrations require a semisimple algebra");
  const auto& w = flag.weights();
  std::map<std::size_t, Subspace> perp;  // keyed by dim of V_m, which identifies the step
  auto complement = [&](const Subspace& v) -> const Subspace& {
    auto it = perp.find(v.dim());
    if (it == perp.end()) it = perp.emplace(v.dim(), lie::orthogonal_complement(g, v)).first;
    return it->second;
  };
  const Weight lo = std::min(w.front(), -w.back()) - 1;
  const Weight hi = std::max(w.back(), -w.front());
  for (Weight m = lo; m <= hi; ++m) {
    if (!(complement(flag.at(m)) == flag.at(-m - 1))) return false;
  }
  return true;
}

Weight mu_bracket(const lie::LieAlgebra& g, const WeightedFlag& flag) {
  if (flag.ambient_dim() != g.dim()) throw MathError("flag does not live in the algebra");
  const std::size_t len = flag.length();
  const auto& w = flag.weights();
  std::optional<Weight> best;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i; j < len; ++j) {
      const Subspace span = bracket_span(g, flag.steps()[i], flag.steps()[j]);
      if (span.is_zero()) continue;
      // The largest k with span ⊄ V_{λ_{k-1}} gives the smallest value for this pair.
      for (std::size_t k = len; k-- > 0;) {
        if (!flag.before(k).contains(span)) {
          const Weight value = w[i] + w[j] - w[k];
          best = best ? std::min(*best, value) : value;
          break;
        }
      }
    }
  }
  if (!best) throw MathError("μ undefined: the bracket vanishes identically on the flag");
  return *best;
}

Weight mu_tensor(const lie::LieAlgebra& g, const WeightedFlag& flag) {
  if (flag.ambient_dim() != g.dim()) throw MathError("flag does not live in the algebra");
  const GradedSplitting split = GradedSplitting::echelon(flag);
  const std::vector<Vector> basis = split.adapted_basis();
  const std::vector<Weight> w = split.adapted_weights();
  const std::size_t r = g.dim();
  Weight total = 0;
  for (auto x : w) total += x;

  std::optional<Weight> best;
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      const Vector uv = g.bracket(basis[a], basis[b]);
      if (is_zero(uv)) continue;
      for (std::size_t omitted = 0; omitted < r; ++omitted) {
        const Weight value = w[a] + w[b] + (total - w[omitted]);
        if (best && value >= *best) continue;
        std::vector<Vector> columns{uv};
        for (std::size_t l = 0; l < r; ++l) {
          if (l != omitted) columns.push_back(basis[l]);
        }
        if (!determinant(Matrix::from_columns(columns, r)).is_zero()) best = value;
      }
    }
  }
  if (!best) throw MathError("μ undefined: the bracket vanishes identically on the flag");
  return *best - total;
}

lie::LieAlgebra graded_limit(const lie::LieAlgebra& g, const WeightedFlag& flag,
                             const std::optional<GradedSplitting>& split) {
  if (flag.ambient_dim() != g.dim()) throw MathError("flag does not live in the algebra");
  const GradedSplitting s = split ? *split : GradedSplitting::echelon(flag);
  if (!(s.flag() == flag)) throw MathError("splitting belongs to a different flag");
  const std::size_t r = g.dim();

  bool abelian = true;
  for (std::size_t l = 0; l < r && abelian; ++l) {
    for (std::size_t m = 0; m < r && abelian; ++m) abelian = g.bracket_of_basis(l, m).empty();
  }
  if (!abelian && mu_bracket(g, flag) < 0) throw MathError("limit diverges: μ < 0");

  const std::vector<Vector> basis = s.adapted_basis();
  const std::vector<Weight> w = s.adapted_weights();
  const auto to_adapted = inverse(Matrix::from_columns(basis, r));

  lie::ConstantTable table;
  for (std::size_t l = 0; l < r; ++l) {
    for (std::size_t m = 0; m < r; ++m) {
      if (l == m) continue;
      const Vector coords = to_adapted->apply(g.bracket(basis[l], basis[m]));
      for (std::size_t n = 0; n < r; ++n) {
        if (coords[n].is_zero()) continue;
        const Weight weight = w[l] + w[m] - w[n];
        if (weight < 0) throw MathError("limit diverges: negative-weight structure constant");
        if (weight == 0) table[{l, m, n}] = coords[n];
      }
    }
  }

  std::vector<std::string> labels;
  for (std::size_t l = 0; l < r; ++l) {
    std::string label = "b" + std::to_string(l);
    for (std::size_t i = 0; i < r; ++i) {
      if (basis[l] == unit_vector(r, i)) label = g.labels()[i];
    }
    labels.push_back(std::move(label));
  }
  return lie::LieAlgebra::from_table(r, table, std::move(labels));
}

WeightedFlag random_flag(const lie::LieAlgebra& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const std::size_t r = g.dim();

  const long max_steps = static_cast<long>(std::min<std::size_t>(r, 5));
  const std::size_t steps = static_cast<std::size_t>(uniform(std::min<long>(2, max_steps), max_steps));
  std::vector<std::size_t> cut_points;
  for (std::size_t d = 1; d < r; ++d) cut_points.push_back(d);
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k + 1 < steps; ++k) {
    const auto idx = static_cast<std::size_t>(uniform(0, static_cast<long>(cut_points.size()) - 1));
    dims.push_back(cut_points[idx]);
    cut_points.erase(cut_points.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  std::sort(dims.begin(), dims.end());
  dims.push_back(r);

  // Sparse small-integer vectors so that special (e.g. isotropic, coordinate) subspaces show up.
  auto draw_vector = [&] {
    Vector v(r);
    for (auto& x : v) {
      const long roll = uniform(0, 7);
      x = Rational(roll < 4 ? 0 : (roll < 6 ? 1 : (roll == 6 ? -1 : 2)));
    }
    return v;
  };
  std::vector<Vector> vectors;
  std::vector<Subspace> chain;
  Subspace current = Subspace::zero(r);
  for (std::size_t d : dims) {
    while (current.dim() < d) {
      Vector v = draw_vector();
      if (current.contains(v)) continue;
      vectors.push_back(std::move(v));
      current = Subspace::span(r, vectors);
    }
    chain.push_back(current);
  }

  std::vector<Weight> piece;
  std::size_t prev = 0;
  for (std::size_t d : dims) {
    piece.push_back(static_cast<Weight>(d - prev));
    prev = d;
  }
  const auto rank = static_cast<Weight>(r);
  std::vector<Weight> base(steps);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Weight total = 0;
    for (std::size_t i = 0; i < steps; ++i) {
      base[i] = i == 0 ? 0 : base[i - 1] + uniform(1, 3);
      total += base[i] * piece[i];
    }
    if (total % rank == 0) {
      std::vector<Weight> weights;
      for (auto b : base) weights.push_back(b - total / rank);
      return WeightedFlag(std::move(weights), std::move(chain));
    }
  }
  Weight total = 0;
  for (std::size_t i = 0; i < steps; ++i) total += base[i] * piece[i];
  std::vector<Weight> weights;
  for (auto b : base) weights.push_back(rank * b - total);
  return WeightedFlag(std::move(weights), std::move(chain));
}

}  // namespace gsheaf::filt
