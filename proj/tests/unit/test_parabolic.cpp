#include <gtest/gtest.h>

#include "gsheaf/corpus.hpp"
#include "gsheaf/error.hpp"
#include "gsheaf/parabolic.hpp"

using namespace gsheaf;
using filt::WeightedFlag;

namespace {

Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

const Vector h = vec({Rational(1), Rational(0), Rational(0)});
const Vector e = vec({Rational(0), Rational(1), Rational(0)});
const Vector f = vec({Rational(0), Rational(0), Rational(1)});

WeightedFlag borel(filt::Weight s = 1) {
  return WeightedFlag({-s, 0, s}, {Subspace::span(3, {e}), Subspace::span(3, {e, h}), Subspace::whole(3)});
}

// sl₃ basis indices: h1 h2 e12 e13 e23 e21 e31 e32.
Subspace coordinate_span(const std::vector<std::size_t>& idx) {
  std::vector<Vector> rows;
  for (auto i : idx) rows.push_back(unit_vector(8, i));
  return Subspace::span(8, rows);
}

WeightedFlag sl3_block_flag() {
  return WeightedFlag({-3, 0, 3}, {coordinate_span({3, 4}), coordinate_span({0, 1, 2, 3, 4, 5}), Subspace::whole(8)});
}

std::vector<WeightedFlag> algebra_corpus(std::size_t n, std::uint64_t randoms) {
  auto flags = corpus::parabolic_flags(n);
  for (std::uint64_t seed = 0; seed < randoms; ++seed) flags.push_back(corpus::random_algebra_flag(n, seed));
  return flags;
}

}  // namespace

TEST(ParabolicFromFiltration, Sl2Borel) {
  const auto g = lie::sl(2);
  const auto data = parab::parabolic_from_filtration(g, borel());
  // ad(h/2) has eigenvalues 1, 0, −1 on e, h, f.
  EXPECT_EQ(data.v, scaled(h, Rational(1, 2)));
  EXPECT_EQ(data.parabolic, Subspace::span(3, {h, e}));
  EXPECT_EQ(data.eigengrading.at(1), Subspace::span(3, {e}));
  EXPECT_EQ(data.eigengrading.at(0), Subspace::span(3, {h}));
  EXPECT_EQ(data.eigengrading.at(-1), Subspace::span(3, {f}));
  // χ = κ(h/2, ·) on the rows (h, e) of q.
  EXPECT_EQ(data.character, vec({Rational(4), Rational(0)}));
}

TEST(ParabolicFromFiltration, TrivialFlag) {
  const auto g = lie::sl(2);
  const auto data = parab::parabolic_from_filtration(g, WeightedFlag::trivial(3));
  EXPECT_EQ(data.v, zero_vector(3));
  EXPECT_TRUE(data.parabolic.is_whole());
}

TEST(ParabolicFromFiltration, Sl3BlockParabolic) {
  const auto g = lie::sl(3);
  const auto data = parab::parabolic_from_filtration(g, sl3_block_flag());
  EXPECT_EQ(data.parabolic, coordinate_span({0, 1, 2, 3, 4, 5}));
  // v = diag(1, 1, −2): H-coordinates are partial diagonal sums (1, 2).
  Vector expected = zero_vector(8);
  expected[0] = Rational(1);
  expected[1] = Rational(2);
  EXPECT_EQ(data.v, expected);
}

TEST(ParabolicFromFiltration, RejectsNonAlgebraOrUnbalanced) {
  const auto g = lie::sl(2);
  const WeightedFlag cartan({-1, 0, 1}, {Subspace::span(3, {h}), Subspace::span(3, {h, e}), Subspace::whole(3)});
  EXPECT_THROW(parab::parabolic_from_filtration(g, cartan), MathError);
  EXPECT_THROW(parab::parabolic_from_filtration(g, borel().shifted(1)), MathError);
  EXPECT_THROW(parab::parabolic_from_filtration(lie::abelian(3), WeightedFlag::trivial(3)), MathError);
}

TEST(FiltrationFromElement, Examples) {
  const auto g = lie::sl(2);
  EXPECT_EQ(parab::filtration_from_element(g, scaled(h, Rational(1, 2))), borel());
  EXPECT_EQ(parab::filtration_from_element(g, zero_vector(3)), WeightedFlag::trivial(3));
  EXPECT_EQ(parab::filtration_from_element(g, h), borel(2));
}

TEST(FiltrationFromElement, RejectsNonIntegral) {
  const auto g = lie::sl(2);
  EXPECT_THROW(parab::filtration_from_element(g, scaled(h, Rational(1, 3))), MathError);
  EXPECT_THROW(parab::filtration_from_element(g, e), MathError);  // nilpotent
  EXPECT_THROW(parab::filtration_from_element(g, sub(e, f)), MathError);  // eigenvalues ±2i
}

TEST(FiltrationFromElement, NonCoordinateGrading) {
  const auto g = lie::sl(2);
  const auto flag = parab::filtration_from_element(g, scaled(add(e, f), Rational(1, 2)));
  EXPECT_EQ(flag.weights(), (std::vector<filt::Weight>{-1, 0, 1}));
  EXPECT_TRUE(filt::is_balanced(flag));
  EXPECT_TRUE(filt::is_algebra_filtration(g, flag));
  EXPECT_TRUE(parab::roundtrip_check(g, flag));

}

TEST(KillingDual, Examples) {
  const auto g = lie::sl(2);
  const Subspace q = Subspace::span(3, {h, e});
  EXPECT_EQ(parab::killing_dual(g, q, vec({Rational(8), Rational(0)})), h);
  EXPECT_EQ(parab::killing_dual(g, q, vec({Rational(0), Rational(0)})), zero_vector(3));
  EXPECT_THROW(parab::killing_dual(g, q, vec({Rational(0), Rational(1)})), MathError);
  EXPECT_THROW(parab::killing_dual(g, Subspace::span(3, {e, f}), vec({Rational(0), Rational(0)})), MathError);
}

TEST(KillingDual, RecoversGradingElement) {
  for (std::size_t n : {2u, 3u}) {
    const auto g = lie::sl(n);
    for (const auto& flag : algebra_corpus(n, 30)) {
      const auto data = parab::parabolic_from_filtration(g, flag);
      EXPECT_EQ(parab::killing_dual(g, data.parabolic, data.character, data.eigengrading.at(0)), data.v);
    }
  }
}

TEST(Roundtrip, Examples) {
  EXPECT_TRUE(parab::roundtrip_check(lie::sl(2), borel()));
  EXPECT_TRUE(parab::roundtrip_check(lie::sl(2), WeightedFlag::trivial(3)));
  EXPECT_TRUE(parab::roundtrip_check(lie::sl(3), sl3_block_flag()));
}

TEST(Roundtrip, CorpusProperties) {
  for (std::size_t n : {2u, 3u}) {
    const auto g = lie::sl(n);
    for (const auto& flag : algebra_corpus(n, 60)) {
      ASSERT_TRUE(parab::roundtrip_check(g, flag));
      const auto data = parab::parabolic_from_filtration(g, flag);
      EXPECT_EQ(data.parabolic, flag.at(0));
      std::map<filt::Weight, std::size_t> multiplicity;
      std::vector<filt::Weight> negated;
      for (const auto& [alpha, space] : data.eigengrading) {
        if (space.is_zero()) continue;
        multiplicity[alpha] = space.dim();
        negated.insert(negated.begin(), -alpha);
      }
      EXPECT_EQ(negated, flag.weights());
      for (const auto& [alpha, dim] : multiplicity) EXPECT_EQ(multiplicity[-alpha], dim) << "eigenvalue symmetry";
      EXPECT_TRUE(lie::is_subalgebra(g, data.parabolic));
    }
  }
}
