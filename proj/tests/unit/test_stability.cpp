#include <gtest/gtest.h>

#include "gsheaf/error.hpp"
#include "gsheaf/scenarios.hpp"
#include "gsheaf/stability.hpp"

using namespace gsheaf;
using stab::Status;

namespace {

Vector ints(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

const Poly m = Poly::monomial(Rational(1), 1);

// Verdicts ordered by permissiveness for the implication chain.
bool semistable(Status s) { return s != Status::Unstable; }

}  // namespace

TEST(FiltrationHilbert, ProportionalStepVanishes) {
  const auto X = geom::blowup_p2();
  const auto L = geom::line_bundle(X, ints({0, 0}), "O");
  const auto total = geom::sum_class({L, L, L});
  const stab::SheafFiltrationSpec spec{{-1, 2}, {L, total}, std::nullopt};
  EXPECT_TRUE(stab::filtration_hilbert(X, spec, total).is_zero());
}

TEST(FiltrationHilbert, Example2ClosedForm) {
  for (long c = -2; c <= 5; ++c) {
    for (long s = -3; s <= 3; ++s) {
      const auto model = scen::example2_model(c, s);
      EXPECT_EQ(stab::filtration_hilbert(model.surface, model.candidates.front(), model.total),
                Poly::constant(Rational(3 * (3 - c))));
    }
  }
}

TEST(FiltrationHilbert, ShiftInvariant) {
  const auto model = scen::example2_model(2, 1);
  auto shifted = model.candidates.front();
  for (auto& w : shifted.weights) w += 1;
  shifted.fiber_flag.reset();
  EXPECT_EQ(stab::filtration_hilbert(model.surface, shifted, model.total),
            stab::filtration_hilbert(model.surface, model.candidates.front(), model.total));
}

TEST(FiltrationHilbert, RejectsInvalidSpecs) {
  const auto model = scen::example2_model(1, 1);
  auto bad = model.candidates.front();
  bad.classes.back().ch2 += Rational(1);
  EXPECT_THROW(stab::filtration_hilbert(model.surface, bad, model.total), MathError);
  bad = model.candidates.front();
  std::swap(bad.classes[0], bad.classes[1]);
  EXPECT_THROW(stab::filtration_hilbert(model.surface, bad, model.total), MathError);
}

TEST(CheckGsheaf, Example2Verdicts) {
  EXPECT_EQ(stab::check_gsheaf(scen::example2_model(4, 0)).status, Status::Stable);
  EXPECT_EQ(stab::check_gsheaf(scen::example2_model(3, 0)).status, Status::StrictlySemistable);
  const auto unstable = stab::check_gsheaf(scen::example2_model(-1, 0));
  EXPECT_EQ(unstable.status, Status::Unstable);
  ASSERT_TRUE(unstable.certificate.has_value());
  EXPECT_EQ(eventual_sign(unstable.polynomial), EventualSign::Positive);
}

TEST(CheckGsheaf, SkipsNonAlgebraCandidatesWithWarning) {
  auto model = scen::example2_model(-1, 0);
  model.candidates.front().fiber_flag = filt::WeightedFlag(
      {-1, 0, 1}, {Subspace::span(3, {ints({1, 0, 0})}), Subspace::span(3, {ints({1, 0, 0}), ints({0, 1, 0})}),
                   Subspace::whole(3)});
  const auto v = stab::check_gsheaf(model);
  EXPECT_EQ(v.status, Status::Stable);  // vacuous: no admissible candidate left
  EXPECT_EQ(v.warnings.size(), 1u);
  model.candidates.front().fiber_flag.reset();
  EXPECT_THROW(stab::check_gsheaf(model), MathError);
}

TEST(CheckTensor, AgreesWithGsheafOnAlgebraCandidates) {
  for (const auto& model : scen::scenario_models()) {
    for (const Poly& delta : {m, Rational(2) * m, m + Poly::constant(Rational(5))}) {
      EXPECT_EQ(stab::check_tensor(model, delta).status, stab::check_gsheaf(model).status);
    }
  }
  EXPECT_EQ(stab::check_tensor(scen::example2_model(4, 0), m).status, Status::Stable);
}

TEST(CheckTensor, NegativeMuCandidateIsCompatible) {
  // A non-algebra balanced flag with vanishing polynomial: μ = −1 makes the
  // tested quantity −δ, eventually negative.
  auto model = scen::example2_model(3, 0);
  model.candidates.front().fiber_flag = filt::WeightedFlag(
      {-1, 0, 1}, {Subspace::span(3, {ints({1, 0, 0})}), Subspace::span(3, {ints({1, 0, 0}), ints({0, 1, 0})}),
                   Subspace::whole(3)});
  const auto v = stab::check_tensor(model, m);
  EXPECT_EQ(v.status, Status::Stable);
  EXPECT_EQ(v.polynomial, Rational(-1) * m);
}

TEST(CheckTensor, RejectsBadDelta) {
  const auto model = scen::example2_model(4, 0);
  EXPECT_THROW(stab::check_tensor(model, Poly::constant(Rational(1))), MathError);
  EXPECT_THROW(stab::check_tensor(model, Rational(-1) * m), MathError);
  EXPECT_THROW(stab::check_tensor(model, m * m), MathError);
}

TEST(CheckSlope, Example2AlwaysStrictlySemistable) {
  for (long c = -2; c <= 5; ++c) {
    EXPECT_EQ(stab::check_slope(scen::example2_model(c, -c)).status, Status::StrictlySemistable);
  }
}

TEST(CheckSlope, ImplicationChainOnScenarios) {
  for (const auto& model : scen::scenario_models()) {
    const auto slope = stab::check_slope(model).status;
    const auto gs = stab::check_gsheaf(model).status;
    if (slope == Status::Stable) EXPECT_EQ(gs, Status::Stable);
    if (semistable(gs)) EXPECT_TRUE(semistable(slope));
  }
  EXPECT_EQ(stab::check_slope(scen::hn_split_model()).status, Status::Unstable);
}

TEST(CheckGiesekerPair, TableRows) {
  const auto X = geom::blowup_p2();
  auto verdict = [&](long c, long s) {
    const auto k = scen::example2_classes(c, s);
    return stab::check_gieseker_pair(X, k.F, k.L).status;
  };
  EXPECT_EQ(verdict(3, -5), Status::Stable);
  EXPECT_EQ(verdict(-1, 3), Status::StrictlySemistable);
  EXPECT_EQ(verdict(4, -5), Status::Unstable);
  const auto k = scen::example2_classes(1, 1);
  EXPECT_THROW(stab::check_gieseker_pair(X, k.F, k.F), MathError);
}

TEST(Hn, P2SplitSum) {
  const auto X = geom::p2();
  const std::vector<geom::SheafClass> summands{geom::line_bundle(X, ints({1})), geom::structure_sheaf(X),
                                               geom::line_bundle(X, ints({-1}))};
  const auto spec = stab::hn_filtration(X, summands);
  EXPECT_EQ(spec.weights, (std::vector<filt::Weight>{-6, 0, 6}));
  EXPECT_EQ(spec.classes[0].rank, 1);
  EXPECT_EQ(spec.classes[1].rank, 2);
  EXPECT_EQ(spec.classes[2].rank, 3);
  EXPECT_TRUE(stab::is_strictly_convex(stab::hn_polygon(X, summands)));
}

TEST(Hn, EqualSlopesGiveTrivialFiltration) {
  const auto X = geom::p2();
  const auto O = geom::structure_sheaf(X);
  const auto spec = stab::hn_filtration(X, {O, O});
  EXPECT_TRUE(spec.trivial());
  EXPECT_THROW(stab::hn_filtration(X, {}), MathError);
}

TEST(Hn, BlowupFiberClasses) {
  const auto X = geom::blowup_p2();
  const auto spec = stab::hn_filtration(X, {geom::line_bundle(X, ints({0, -1})), geom::line_bundle(X, ints({0, 1}))});
  EXPECT_EQ(spec.weights, (std::vector<filt::Weight>{-2, 2}));
}

TEST(Hn, ConvexityDetectsNonConvex) {
  EXPECT_FALSE(stab::is_strictly_convex({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(2), Rational(1)}}));
}

TEST(Hn, SplitModelIsUnstable) {
  const auto v = stab::check_gsheaf(scen::hn_split_model());
  EXPECT_EQ(v.status, Status::Unstable);
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_EQ(v.certificate->weights, (std::vector<filt::Weight>{-6, 0, 6}));
}

TEST(Deformation, Example2EqualityCase) {
  const auto model = scen::example2_model(3, 0);
  const auto next = stab::admissible_deformation(model, model.candidates.front());
  EXPECT_EQ(geom::sum_class(next.summands), model.total);
  EXPECT_EQ(determinant(lie::killing_matrix(next.fiber)), Rational(-128));
  EXPECT_EQ(next.fiber.dim(), 3u);
  const auto again = stab::admissible_deformation(next, next.candidates.front());
  EXPECT_EQ(stab::canonical_form(again), stab::canonical_form(next));
}

TEST(Deformation, RejectsNonAdmissible) {
  const auto model = scen::example2_model(4, 0);
  EXPECT_THROW(stab::admissible_deformation(model, model.candidates.front()), MathError);
}

TEST(Grad, StableIsIdentity) {
  const auto model = scen::example2_model(4, -6);
  const auto result = stab::grad(model);
  EXPECT_EQ(result.iterations, 0);
  EXPECT_EQ(stab::canonical_form(result.model), stab::canonical_form(model));
}

TEST(Grad, EqualityCaseReachesFixpoint) {
  const auto result = stab::grad(scen::example2_model(3, 0));
  EXPECT_GE(result.iterations, 1);
  EXPECT_LE(result.iterations, 3);
  EXPECT_EQ(determinant(lie::killing_matrix(result.model.fiber)), Rational(-128));
  const auto twice = stab::grad(result.model);
  EXPECT_EQ(twice.iterations, 0);
  EXPECT_EQ(stab::canonical_form(twice.model), stab::canonical_form(result.model));
}

TEST(Grad, SEquivalence) {
  const auto model = scen::example2_model(3, -5);
  EXPECT_TRUE(stab::s_equivalent(model, stab::grad(model).model));
  EXPECT_FALSE(stab::s_equivalent(scen::example2_model(3, -5), scen::example2_model(4, -6)));
  EXPECT_THROW(stab::grad(scen::example2_model(-1, 3)), MathError);
}

TEST(Model, ValidateRejectsInconsistentData) {
  auto model = scen::example2_model(1, 1);
  model.total.c1 = ints({1, 0});
  EXPECT_THROW(model.validate(), MathError);
  model = scen::example2_model(1, 1);
  model.fiber = lie::sl(3);
  EXPECT_THROW(model.validate(), MathError);
}

TEST(Scenarios, Example1) {
  const auto r = scen::example1_report();
  EXPECT_EQ(r.c2_adF, Rational(7));
  EXPECT_EQ(r.gm_moduli_dim, 4);
  EXPECT_EQ(r.quot_dim, 16);
  EXPECT_EQ(r.extension_class_c2, Rational(1));
  EXPECT_TRUE(r.discrepancy);
}

TEST(Scenarios, Example2Reports) {
  const auto a = scen::example2_report(3, -5);
  EXPECT_EQ(a.vb_verdict, Status::Stable);
  EXPECT_EQ(a.pb_verdict, Status::StrictlySemistable);
  EXPECT_EQ(a.slope_F, Rational(-5));
  const auto b = scen::example2_report(4, -6);
  EXPECT_EQ(b.vb_verdict, Status::Stable);
  EXPECT_EQ(b.pb_verdict, Status::Stable);
  const auto c = scen::example2_report(-1, 3);
  EXPECT_EQ(c.vb_verdict, Status::StrictlySemistable);
  EXPECT_EQ(c.pb_verdict, Status::Unstable);
}

// Independent evaluation of P_L − P_F/2 from the closed Riemann–Roch
// expression on the blown-up plane: equals (3c² + (2s−1)c + 2)/4.
TEST(Scenarios, GiesekerConstantValue) {
  for (long c = -2; c <= 5; ++c) {
    for (long s = -7; s <= 5; ++s) {
      const auto r = scen::example2_report(c, s);
      EXPECT_EQ(r.gieseker_poly, Poly::constant(Rational(3 * c * c + (2 * s - 1) * c + 2, 4)));
      if (r.factor_vs_printed) EXPECT_EQ(*r.factor_vs_printed, Rational(1, 2));
    }
  }
}

TEST(Scenarios, Table) {
  const auto rows = scen::example2_table();
  ASSERT_EQ(rows.size(), 7u);
  for (const auto& row : rows) {
    const bool documented = (row.report.c == -1 && (row.report.s == 4 || row.report.s == 2));
    EXPECT_EQ(row.vector_agrees(), !documented) << row.report.c << "," << row.report.s;
    EXPECT_TRUE(row.principal_agrees());
  }
  EXPECT_EQ(rows[0].report.vb_verdict, Status::Stable);
  EXPECT_EQ(rows[2].report.vb_verdict, Status::Unstable);
}
