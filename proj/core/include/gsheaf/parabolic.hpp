#pragma once

#include <map>
#include <optional>

#include "gsheaf/flag.hpp"
#include "gsheaf/lie_algebra.hpp"
#include "gsheaf/subspace.hpp"

namespace gsheaf::parab {

using filt::Weight;

/// Grading element v with its integer ad(v)-eigenspaces, the parabolic
/// q = ⊕_{α ≥ 0} g^α, and the character χ = κ(v, ·) evaluated on the
/// echelon basis rows of q.
struct ParabolicData {
  Vector v;
  std::map<Weight, Subspace> eigengrading;  // eigenvalue α ↦ g^α
  Subspace parabolic;
  Vector character;
};

/// A v with [v, x] ≡ −λ_i x mod V_{λ_{i-1}} for all x ∈ V_{λ_i}.
/// Throws MathError when no such element exists.
Vector grading_element(const lie::LieAlgebra& g, const filt::WeightedFlag& flag);

/// Requires a balanced algebra filtration of a semisimple algebra.
ParabolicData parabolic_from_filtration(const lie::LieAlgebra& g, const filt::WeightedFlag& flag);

/// Steps ⊕_{−α ≤ λ} g^α, weights the distinct −α.
/// Throws MathError("element not graded-integral") unless ad(v) is
/// diagonalizable with integer eigenvalues.
filt::WeightedFlag filtration_from_element(const lie::LieAlgebra& g, const Vector& v);

/// The v in the Levi part of q with κ(v, q_i) = chi_i for the echelon rows
/// q_i of q. Without `levi`, the echelon complement of the nilradical q^⊥
/// inside q stands in for it; with `levi`, v is also required to commute
/// with it.
Vector killing_dual(const lie::LieAlgebra& g, const Subspace& q, const Vector& chi,
                    const std::optional<Subspace>& levi = std::nullopt);

/// filtration_from_element(parabolic_from_filtration(flag).v) == flag.
bool roundtrip_check(const lie::LieAlgebra& g, const filt::WeightedFlag& flag);

}  // namespace gsheaf::parab
