#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsheaf/lie_algebra.hpp"
#include "gsheaf/subspace.hpp"

namespace gsheaf::filt {

using Weight = std::int64_t;

/// 0 ⊊ V_{λ_1} ⊊ … ⊊ V_{λ_{t+1}} = whole space, with λ_1 < … < λ_{t+1}.
///
/// The integer-indexed view follows the convention V_m = V_{λ_{i(m)}} with
/// i(m) the largest index such that λ_i ≤ m, and V_m = 0 below λ_1.
class WeightedFlag {
 public:
  /// Throws MathError on any violated invariant.
  WeightedFlag(std::vector<Weight> weights, std::vector<Subspace> steps);

  /// The one-step flag with weight 0.
  static WeightedFlag trivial(std::size_t ambient);

  std::size_t ambient_dim() const { return steps_.back().ambient_dim(); }
  std::size_t length() const { return weights_.size(); }
  const std::vector<Weight>& weights() const { return weights_; }
  const std::vector<Subspace>& steps() const { return steps_; }

  /// V_m in the integer-indexed convention.
  Subspace at(Weight m) const;

  /// V_{λ_{i-1}} for 0-based step index i, the zero subspace for i = 0.
  Subspace before(std::size_t i) const;

  /// dim(V_{λ_i} / V_{λ_{i-1}}).
  std::vector<std::size_t> piece_dims() const;

  /// Same steps with weights multiplied by a positive integer.
  WeightedFlag scaled(Weight factor) const;
  /// Same steps with every weight shifted by `offset`.
  WeightedFlag shifted(Weight offset) const;

  friend bool operator==(const WeightedFlag&, const WeightedFlag&) = default;

 private:
  std::vector<Weight> weights_;
  std::vector<Subspace> steps_;
};

/// Direct-sum pieces with V_{λ_i} = V_{λ_{i-1}} ⊕ piece_i.
class GradedSplitting {
 public:
  /// Throws MathError when the pieces do not reconstruct the steps.
  GradedSplitting(WeightedFlag flag, std::vector<Subspace> pieces);

  /// Pieces chosen as echelon complements of consecutive steps.
  static GradedSplitting echelon(const WeightedFlag& flag);

  const WeightedFlag& flag() const { return flag_; }
  const std::vector<Subspace>& pieces() const { return pieces_; }

  /// Adapted basis: the pieces' echelon bases concatenated in step order,
  /// with the last vector rescaled so the basis matrix has determinant 1.
  std::vector<Vector> adapted_basis() const;
  /// Weight of each adapted basis vector.
  std::vector<Weight> adapted_weights() const;

 private:
  WeightedFlag flag_;
  std::vector<Subspace> pieces_;
};

/// Σ λ_i · dim(V_{λ_i}/V_{λ_{i-1}}) = 0.
bool is_balanced(const WeightedFlag& flag);

/// [V_{λ_i}, V_{λ_j}] ⊆ V_{λ_i+λ_j} for all i, j.
bool is_algebra_filtration(const lie::LieAlgebra& g, const WeightedFlag& flag);

/// V_m^⊥ = V_{-m-1} under the Killing form for every integer m.
/// Throws MathError for non-semisimple g.
bool is_orthogonal_filtration(const lie::LieAlgebra& g, const WeightedFlag& flag);

/// min{λ_i + λ_j − λ_k : [V_{λ_i}, V_{λ_j}] ⊄ V_{λ_{k-1}}}.
/// Throws MathError("μ undefined ...") when the bracket vanishes on the flag.
Weight mu_bracket(const lie::LieAlgebra& g, const WeightedFlag& flag);

/// The same weight computed from the Lie tensor
/// φ(u, v, w_1∧…∧w_{r-1}) = det[[u,v], w_1, …, w_{r-1}] over adapted-basis
/// multi-indices, re-centred by the total weight Σ λ_i dim(piece_i).
Weight mu_tensor(const lie::LieAlgebra& g, const WeightedFlag& flag);

/// One-parameter-subgroup limit t → 0 of the structure constants in the
/// adapted basis of `split`: weight-zero constants are kept, positive-weight
/// constants dropped. Throws MathError("limit diverges") when μ < 0.
lie::LieAlgebra graded_limit(const lie::LieAlgebra& g, const WeightedFlag& flag,
                             const std::optional<GradedSplitting>& split = std::nullopt);

/// Deterministic balanced flag drawn from `seed`: a random echelon chain of
/// small-integer subspaces with integer weights solving Σ λ_i dim(gr_i) = 0.
WeightedFlag random_flag(const lie::LieAlgebra& g, std::uint64_t seed);

}  // namespace gsheaf::filt
