#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsheaf/flag.hpp"
#include "gsheaf/lie_algebra.hpp"
#include "gsheaf/poly.hpp"
#include "gsheaf/surface.hpp"

namespace gsheaf::stab {

using filt::Weight;

/// Sheaf-level weighted filtration E_{λ_1} ⊊ … ⊊ E_{λ_{t+1}} = E, known by
/// the numerical classes of its steps, optionally with the fiber flag it
/// induces at a general point.
struct SheafFiltrationSpec {
  std::vector<Weight> weights;
  std::vector<geom::SheafClass> classes;
  std::optional<filt::WeightedFlag> fiber_flag;

  /// Throws MathError unless weights and ranks strictly increase, the last
  /// class equals `total`, and the fiber flag (if any) has the same weights
  /// and step dimensions equal to the ranks.
  void validate(const geom::SheafClass& total) const;
  bool trivial() const { return weights.size() == 1; }
};

/// Numerical model of a principal G-sheaf: the adjoint sheaf E with generic
/// fiber g′ and the declared candidate filtrations. Verdicts are relative to
/// the candidate list.
struct GSheafModel {
  geom::SurfaceModel surface;
  geom::SheafClass total;
  lie::LieAlgebra fiber;
  std::vector<SheafFiltrationSpec> candidates;
  /// Direct-sum description of E (a single summand unless E is split).
  std::vector<geom::SheafClass> summands;
  /// Line-bundle classes d_1…d_q carried as metadata only.
  std::vector<Vector> tau;

  /// rk E = dim g′, deg E = 0, g′ semisimple, candidates and summands consistent.
  void validate() const;
};

enum class Status { Stable, StrictlySemistable, Unstable };
std::string to_string(Status s);

struct StabilityVerdict {
  Status status = Status::Stable;
  std::optional<SheafFiltrationSpec> certificate;
  Poly polynomial;
  /// Candidates skipped as irrelevant to the test, with the reason.
  std::vector<std::string> warnings;
};

/// Σ_{i ≤ t} (λ_{i+1} − λ_i)(r·P_{E_{λ_i}} − r_{λ_i}·P_E).
Poly filtration_hilbert(const geom::SurfaceModel& X, const SheafFiltrationSpec& spec, const geom::SheafClass& total);
/// The same sum with degrees in place of Hilbert polynomials.
Rational filtration_degree(const geom::SurfaceModel& X, const SheafFiltrationSpec& spec, const geom::SheafClass& total);

/// Test over the balanced algebra candidates; the rest are skipped with a warning.
StabilityVerdict check_gsheaf(const GSheafModel& model);
/// filtration_hilbert + μ·δ over all balanced candidates (any μ).
StabilityVerdict check_tensor(const GSheafModel& model, const Poly& delta);
StabilityVerdict check_slope(const GSheafModel& model);
/// Classical test by a single subsheaf: sign of P_sub/r_sub − P_E/r_E.
StabilityVerdict check_gieseker_pair(const geom::SurfaceModel& X, const geom::SheafClass& total,
                                     const geom::SheafClass& sub);

/// HN filtration of ⊕ summands: groups of equal slope in decreasing order,
/// weights −r!·μ(group).
SheafFiltrationSpec hn_filtration(const geom::SurfaceModel& X, const std::vector<geom::SheafClass>& summands);
/// Vertices (rank, degree) of the HN polygon, starting at (0, 0).
std::vector<std::pair<Rational, Rational>> hn_polygon(const geom::SurfaceModel& X,
                                                       const std::vector<geom::SheafClass>& summands);
/// Successive edge slopes strictly decrease.
bool is_strictly_convex(const std::vector<std::pair<Rational, Rational>>& polygon);

/// Passage to the associated graded object of an admissible candidate.
/// Throws MathError("filtration not admissible") otherwise.
GSheafModel admissible_deformation(const GSheafModel& model, const SheafFiltrationSpec& spec);

/// Sorted summand classes plus the fiber's structure constants.
struct CanonicalForm {
  std::vector<geom::SheafClass> summands;
  std::vector<lie::StructureConstant> constants;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};
CanonicalForm canonical_form(const GSheafModel& model);

struct GradResult {
  GSheafModel model;
  /// Deformations applied before the fixpoint was reached.
  int iterations = 0;
};

/// Iterated admissible deformation until no admissible candidate is left or
/// the canonical form stops changing. Throws MathError on unstable input.
GradResult grad(const GSheafModel& model);
bool s_equivalent(const GSheafModel& a, const GSheafModel& b);

}  // namespace gsheaf::stab
