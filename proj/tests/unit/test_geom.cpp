#include <gtest/gtest.h>

#include <random>

#include "gsheaf/error.hpp"
#include "gsheaf/surface.hpp"

using namespace gsheaf;
using geom::SheafClass;

namespace {

Vector ints(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

SheafClass random_class(std::mt19937_64& rng, const geom::SurfaceModel& X) {
  SheafClass c;
  c.rank = 1 + static_cast<long>(rng() % 4);
  c.c1 = Vector(X.picard_rank());
  for (auto& x : c.c1) x = Rational(static_cast<long>(rng() % 11) - 5);
  c.ch2 = Rational(static_cast<long>(rng() % 21) - 10, 2);
  return c;
}

}  // namespace

TEST(Surfaces, BlowupIntersections) {
  const auto X = geom::blowup_p2();
  EXPECT_EQ(geom::intersect(X, X.H, X.H), Rational(3));
  EXPECT_EQ(geom::intersect(X, X.K, X.H), Rational(-5));
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) EXPECT_EQ(geom::degree(X, geom::line_bundle(X, ints({a, b}))), Rational(a + b));
  }
}

TEST(Surfaces, P2) {
  const auto X = geom::p2();
  EXPECT_EQ(geom::intersect(X, X.K, X.H), Rational(-3));
  EXPECT_EQ(geom::degree(X, geom::line_bundle(X, ints({4}))), Rational(4));
}

TEST(Surfaces, ValidateRejectsBadModels) {
  auto X = geom::blowup_p2();
  X.H = ints({1, 0});  // H² = −1
  EXPECT_THROW(X.validate(), MathError);
  X = geom::blowup_p2();
  X.intersection(0, 1) = Rational(2);
  EXPECT_THROW(X.validate(), MathError);
  EXPECT_THROW(geom::curve(0, 0), MathError);
}

TEST(HilbertPoly, StructureSheafOfP2) {
  const auto X = geom::p2();
  // (m+1)(m+2)/2
  EXPECT_EQ(geom::hilbert_poly(X, geom::structure_sheaf(X)), (Poly{Rational(1), Rational(3, 2), Rational(1, 2)}));
}

TEST(HilbertPoly, LineBundlesOnP2CountMonomials) {
  const auto X = geom::p2();
  for (long d = -2; d <= 4; ++d) {
    const Poly p = geom::hilbert_poly(X, geom::line_bundle(X, ints({d})));
    for (long m = 0; m <= 5; ++m) {
      const long k = m + d;  // h⁰(O(k)) = C(k+2, 2) for k ≥ 0, and χ is the same polynomial
      EXPECT_EQ(p.evaluate(Rational(m)), Rational((k + 1) * (k + 2), 2));
    }
  }
}

TEST(HilbertPoly, FiberMultiplesOnBlowup) {
  const auto X = geom::blowup_p2();
  for (long s = -6; s <= 6; ++s) {
    EXPECT_EQ(geom::hilbert_poly(X, geom::line_bundle(X, ints({0, s}))),
              (Poly{Rational(s + 1), Rational(2 * s + 5, 2), Rational(3, 2)}));
  }
}

TEST(HilbertPoly, PointTwistShiftsConstant) {
  const auto X = geom::blowup_p2();
  const auto L = geom::line_bundle(X, ints({1, 1}));
  EXPECT_EQ(geom::hilbert_poly(X, geom::point_twist(L, 3)), geom::hilbert_poly(X, L) - Poly::constant(Rational(3)));
}

TEST(HilbertPoly, CurveVariant) {
  const auto C = geom::curve(2, 3);
  const SheafClass F{2, ints({5}), Rational(0), "F"};
  // r·deg H·m + deg + r(1 − g)
  EXPECT_EQ(geom::hilbert_poly(C, F), (Poly{Rational(3), Rational(6)}));
  EXPECT_THROW(geom::c2_from_ch(C, F), MathError);
}

TEST(Degree, SlopeAndErrors) {
  const auto X = geom::blowup_p2();
  EXPECT_EQ(geom::slope(X, geom::line_bundle(X, ints({0, 4}))), Rational(4));
  const SheafClass point{0, ints({0, 0}), Rational(-1), "pt"};
  EXPECT_THROW(geom::slope(X, point), MathError);
}

TEST(ClassAlgebra, Example1AdjointClass) {
  const auto X = geom::p2();
  const SheafClass F{2, ints({1}), Rational(-3, 2), "F"};
  const auto E = geom::end0_class(X, F);
  EXPECT_EQ(E.rank, 3);
  EXPECT_EQ(E.c1, ints({0}));
  EXPECT_EQ(E.ch2, Rational(-7));
  EXPECT_EQ(geom::c2_from_ch(X, E), Rational(7));
}

TEST(ClassAlgebra, Conversions) {
  const auto X = geom::p2();
  EXPECT_EQ(geom::ch2_from_c2(X, ints({1}), Rational(2)), Rational(-3, 2));
  EXPECT_EQ(geom::c2_from_ch(X, geom::line_bundle(X, ints({3}))), Rational(0));
  // c2(End⁰F) = 4c2 − c1² for rank 2.
  for (long c1 = -2; c1 <= 2; ++c1) {
    for (long c2 = -1; c2 <= 4; ++c2) {
      const SheafClass F{2, ints({c1}), geom::ch2_from_c2(X, ints({c1}), Rational(c2)), "F"};
      EXPECT_EQ(geom::c2_from_ch(X, geom::end0_class(X, F)), Rational(4 * c2 - c1 * c1));
    }
  }
}

TEST(ClassAlgebra, Identities) {
  const auto X = geom::blowup_p2();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_class(rng, X), b = random_class(rng, X);
    EXPECT_EQ(geom::dual_class(geom::dual_class(a)), a);
    EXPECT_EQ(geom::degree(X, geom::dual_class(a)), -geom::degree(X, a));
    const auto e = geom::end0_class(X, a);
    EXPECT_TRUE(geom::degree(X, e).is_zero());
    EXPECT_EQ(geom::dual_class(e), e);
    EXPECT_EQ(geom::hilbert_poly(X, geom::sum_class({a, b})), geom::hilbert_poly(X, a) + geom::hilbert_poly(X, b));
    EXPECT_EQ(gsheaf::eventual_sign(geom::hilbert_poly(X, a)), EventualSign::Positive);
    EXPECT_EQ(geom::tensor_class(X, a, b), geom::tensor_class(X, b, a));
    EXPECT_EQ(geom::difference_class(geom::sum_class({a, b}), b), a);
  }
}

TEST(ClassAlgebra, TensorOfLineBundles) {
  const auto X = geom::blowup_p2();
  const auto a = geom::line_bundle(X, ints({1, 2})), b = geom::line_bundle(X, ints({-3, 1}));
  EXPECT_EQ(geom::tensor_class(X, a, b), geom::line_bundle(X, ints({-2, 3})));
}

TEST(Dimensions, ModuliAndQuot) {
  const auto X = geom::p2();
  EXPECT_EQ(geom::moduli_dim_gm(X, 2, ints({1}), Rational(2)), 4);
  EXPECT_EQ(geom::quot_dim(3, 4), 16);
  EXPECT_EQ(geom::quot_dim(5, 0), 0);
  EXPECT_THROW(geom::moduli_dim_gm(geom::blowup_p2(), 2, ints({1, 0}), Rational(2)), MathError);
  EXPECT_THROW(geom::moduli_dim_gm(X, 3, ints({1}), Rational(2)), MathError);
  EXPECT_THROW(geom::quot_dim(0, 1), MathError);
}
