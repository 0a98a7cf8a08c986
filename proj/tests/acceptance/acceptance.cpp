// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gsheaf/corpus.hpp"
#include "gsheaf/error.hpp"
#include "gsheaf/flag.hpp"
#include "gsheaf/lie_algebra.hpp"
#include "gsheaf/parabolic.hpp"
#include "gsheaf/scenarios.hpp"
#include "gsheaf/stability.hpp"
#include "gsheaf/surface.hpp"

using namespace gsheaf;
using stab::Status;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Records the first failure; later checks are still evaluated.
struct Checker {
  Outcome out;
  void expect(bool ok, const std::string& what) {
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
};

Vector ints(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<filt::WeightedFlag> algebra_corpus(std::size_t n) {
  auto flags = corpus::parabolic_flags(n);
  for (std::uint64_t seed = 0; seed < 25; ++seed) flags.push_back(corpus::random_algebra_flag(n, seed));
  return flags;
}

/// Explicit sl₂-triple (e, h, f) in a 3-dimensional algebra: e nilpotent,
/// [h,e] = 2e, [e,f] = h, [h,f] = −2f, all three independent. Its existence
/// is an isomorphism with sl₂ over ℚ.
bool has_sl2_triple(const lie::LieAlgebra& g) {
  if (g.dim() != 3) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    const Vector e = g.basis_vector(i);
    const Matrix ade = g.ad(e);
    if (!(ade * ade * ade).is_zero() || ade.is_zero()) continue;
    // [e, h] = −2e
    const auto h = solve(ade, scaled(e, Rational(-2)));
    if (!h) continue;
    const Matrix adh = g.ad(*h);
    // [e, f] = h and ([h, ·] + 2)f = 0, stacked.
    Matrix a(6, 3);
    Vector b(6);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        a(r, c) = ade(r, c);
        a(r + 3, c) = adh(r, c) + (r == c ? Rational(2) : Rational(0));
      }
      b[r] = (*h)[r];
    }
    const auto f = solve(a, b);
    if (!f) continue;
    if (rank(Matrix::from_rows({e, *h, *f}, 3)) != 3) continue;
    if (g.bracket(*h, e) == scaled(e, Rational(2)) && g.bracket(e, *f) == *h &&
        g.bracket(*h, *f) == scaled(*f, Rational(-2))) {
      return true;
    }
  }
  return false;
}

Outcome killing_criterion() {
  Checker c;
  const Matrix k = lie::killing_matrix(lie::sl(2));
  Matrix expected(3, 3);
  expected(0, 0) = Rational(8);
  expected(1, 2) = Rational(4);
  expected(2, 1) = Rational(4);
  c.expect(k == expected, "sl2 Killing matrix");
  c.expect(determinant(k) == Rational(-128), "sl2 det κ");
  for (std::size_t n = 2; n <= 4; ++n) c.expect(lie::is_semisimple(lie::sl(n)), "sl" + std::to_string(n) + " semisimple");
  return c.out;
}

Outcome mu0_criterion() {
  Checker c;
  const std::vector<std::pair<std::size_t, std::uint64_t>> suites{{2, 500}, {3, 200}};
  for (const auto& [n, count] : suites) {
    const auto g = lie::sl(n);
    for (std::uint64_t seed = 0; seed < count; ++seed) {
      const auto flag = filt::random_flag(g, seed);
      c.expect(filt::is_balanced(flag), "random flag not balanced");
      const auto mu = filt::mu_bracket(g, flag);
      c.expect(mu <= 0, "μ > 0 for sl" + std::to_string(n) + " seed " + std::to_string(seed));
      c.expect((mu == 0) == filt::is_algebra_filtration(g, flag),
               "μ = 0 ⟺ algebra fails for sl" + std::to_string(n) + " seed " + std::to_string(seed));
    }
    for (const auto& flag : algebra_corpus(n)) c.expect(filt::mu_bracket(g, flag) == 0, "algebra corpus μ ≠ 0");
  }
  return c.out;
}

Outcome samemu_criterion() {
  Checker c;
  const auto g = lie::sl(2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto flag = filt::random_flag(g, seed);
    c.expect(filt::mu_tensor(g, flag) == filt::mu_bracket(g, flag), "μ_tens ≠ μ at seed " + std::to_string(seed));
  }
  return c.out;
}

Outcome selforth_criterion() {
  Checker c;
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto g = lie::sl(n);
    std::vector<filt::WeightedFlag> flags;
    for (const auto& f : algebra_corpus(n)) {
      flags.push_back(f);
      flags.push_back(f.shifted(1));
    }
    for (std::uint64_t seed = 0; seed < (n == 2 ? 200u : 100u); ++seed) flags.push_back(filt::random_flag(g, seed));
    for (std::size_t i = 0; i < flags.size(); ++i) {
      const bool lhs = filt::is_balanced(flags[i]) && filt::is_algebra_filtration(g, flags[i]);
      c.expect(lhs == filt::is_orthogonal_filtration(g, flags[i]),
               "sl" + std::to_string(n) + " corpus flag " + std::to_string(i));
    }
  }
  return c.out;
}

Outcome isomfilt_criterion() {
  Checker c;
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto g = lie::sl(n);
    const Rational det = determinant(lie::killing_matrix(g));
    for (const auto& flag : algebra_corpus(n)) {
      const auto limit = filt::graded_limit(g, flag);
      c.expect(lie::check_jacobi(limit.dim(), limit.table()), "limit violates Jacobi");
      c.expect(lie::is_semisimple(limit), "limit not semisimple");
      c.expect(determinant(lie::killing_matrix(limit)) == det, "det κ not preserved");
      if (n == 2) c.expect(has_sl2_triple(limit), "no sl2-triple in sl2 limit");
    }
  }
  return c.out;
}

Outcome roundtrip_criterion() {
  Checker c;
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto g = lie::sl(n);
    for (const auto& flag : algebra_corpus(n)) {
      c.expect(parab::roundtrip_check(g, flag), "roundtrip failed");
      const auto data = parab::parabolic_from_filtration(g, flag);
      std::vector<filt::Weight> negated;
      for (const auto& [alpha, space] : data.eigengrading) {
        if (!space.is_zero()) negated.insert(negated.begin(), -alpha);
      }
      c.expect(negated == flag.weights(), "weights ≠ −eigenvalues");
    }
  }
  return c.out;
}

Outcome riemann_roch_criterion() {
  Checker c;
  const auto P = geom::p2();
  c.expect(geom::hilbert_poly(P, geom::structure_sheaf(P)) == Poly{Rational(1), Rational(3, 2), Rational(1, 2)},
           "P_O on P2");
  const auto X = geom::blowup_p2();
  c.expect(geom::intersect(X, X.H, X.H) == Rational(3), "H²");
  c.expect(geom::intersect(X, X.K, X.H) == Rational(-5), "K·H");
  for (long a = -4; a <= 4; ++a) {
    for (long b = -4; b <= 4; ++b) c.expect(geom::degree(X, geom::line_bundle(X, ints({a, b}))) == Rational(a + b), "deg");
  }
  for (long s = -7; s <= 7; ++s) {
    const Poly expected{Rational(s + 1), Rational(2 * s + 5, 2), Rational(3, 2)};
    c.expect(geom::hilbert_poly(X, geom::line_bundle(X, ints({0, s}))) == expected, "P_O(sR)");
  }
  return c.out;
}

Outcome example1_criterion() {
  Checker c;
  const auto r = scen::example1_report();
  c.expect(r.c2_adF == Rational(7), "c2(End⁰F)");
  c.expect(r.gm_moduli_dim == 4, "moduli dimension");
  c.expect(r.quot_dim == 16, "Quot dimension");
  return c.out;
}

EventualSign sign_of(const Rational& q) {
  return q.is_zero() ? EventualSign::Zero : (q > Rational(0) ? EventualSign::Positive : EventualSign::Negative);
}

Outcome example2_grid_criterion() {
  Checker c;
  for (long cc = -2; cc <= 5; ++cc) {
    for (long s = -7; s <= 5; ++s) {
      const auto r = scen::example2_report(cc, s);
      const std::string at = "(" + std::to_string(cc) + "," + std::to_string(s) + ")";
      c.expect(r.gieseker_poly.degree() <= 0, "Gieseker polynomial not constant at " + at);
      c.expect(r.pE_poly.degree() <= 0, "principal polynomial not constant at " + at);
      c.expect(eventual_sign(r.gieseker_poly) == sign_of(Rational(3 * cc * cc + (2 * s - 1) * cc + 2)),
               "Gieseker sign at " + at);
      c.expect(eventual_sign(r.pE_poly) == sign_of(Rational(3 - cc)), "principal sign at " + at);
    }
  }
  return c.out;
}

Outcome table_criterion() {
  Checker c;
  const auto rows = scen::example2_table();
  c.expect(rows.size() == 7, "table size");
  for (const auto& row : rows) {
    const long cc = row.report.c, s = row.report.s;
    const std::string at = "(" + std::to_string(cc) + "," + std::to_string(s) + ")";
    if (cc == -1 && (s == 4 || s == 2)) {
      c.expect(!row.vector_agrees(), "row " + at + " unexpectedly agrees");
      c.expect(row.report.vb_verdict == (s == 4 ? Status::Stable : Status::Unstable), "vector verdict at " + at);
      c.expect(row.report.pb_verdict == Status::Unstable && row.principal_agrees(), "principal verdict at " + at);
    } else {
      c.expect(row.vector_agrees() && row.principal_agrees(), "row " + at + " disagrees");
    }
  }
  return c.out;
}

Outcome samestable_criterion() {
  Checker c;
  const Poly m = Poly::monomial(Rational(1), 1);
  const std::vector<Poly> deltas{m, Rational(2) * m, m + Poly::constant(Rational(5))};
  for (long cc = -2; cc <= 5; ++cc) {
    for (long s = -7; s <= 5; ++s) {
      const auto model = scen::example2_model(cc, s);
      const auto expected = stab::check_gsheaf(model).status;
      for (const auto& d : deltas) {
        c.expect(stab::check_tensor(model, d).status == expected,
                 "δ = " + d.to_string() + " at (" + std::to_string(cc) + "," + std::to_string(s) + ")");
      }
    }
  }
  return c.out;
}

Outcome hn_criterion() {
  Checker c;
  const auto P = geom::p2();
  const std::vector<geom::SheafClass> split{geom::line_bundle(P, ints({1})), geom::structure_sheaf(P),
                                            geom::line_bundle(P, ints({-1}))};
  c.expect(stab::hn_filtration(P, split).weights == std::vector<filt::Weight>{-6, 0, 6}, "HN weights");
  c.expect(stab::is_strictly_convex(stab::hn_polygon(P, split)), "HN polygon convexity");
  for (const auto& model : scen::scenario_models()) {
    const auto slope = stab::check_slope(model).status;
    const auto gs = stab::check_gsheaf(model).status;
    if (slope == Status::Stable) c.expect(gs == Status::Stable, "slope-stable but not stable");
    if (gs != Status::Unstable) c.expect(slope != Status::Unstable, "semistable but slope-unstable");
  }
  return c.out;
}

Outcome grad_criterion() {
  Checker c;
  for (const auto& model : scen::scenario_models()) {
    if (stab::check_gsheaf(model).status == Status::Unstable) continue;
    const auto once = stab::grad(model);
    const auto twice = stab::grad(once.model);
    c.expect(stab::canonical_form(twice.model) == stab::canonical_form(once.model), "grad not idempotent");
    c.expect(stab::s_equivalent(model, once.model), "model not S-equivalent to its grad");
  }
  const auto result = stab::grad(scen::example2_model(3, 0));
  c.expect(result.iterations <= 3, "c = 3 needs more than 3 iterations");
  c.expect(stab::grad(result.model).iterations == 0, "c = 3 result is not a fixpoint");
  c.expect(determinant(lie::killing_matrix(result.model.fiber)) == Rational(-128), "fiber det κ");
  return c.out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Killing form of sl2; sl2, sl3, sl4 semisimple", killing_criterion},
      {"μ ≤ 0 with equality exactly on algebra flags", mu0_criterion},
      {"tensor weight equals bracket weight", samemu_criterion},
      {"balanced algebra ⟺ orthogonal", selforth_criterion},
      {"graded limits stay semisimple with det κ", isomfilt_criterion},
      {"filtration ↔ parabolic round trip", roundtrip_criterion},
      {"Riemann–Roch values", riemann_roch_criterion},
      {"rank-2 example on P2", example1_criterion},
      {"blown-up plane grid signs", example2_grid_criterion},
      {"verdict table", table_criterion},
      {"tensor test ⟺ sheaf test for δ ∈ {m, 2m, m+5}", samestable_criterion},
      {"HN filtration and implication chain", hn_criterion},
      {"grad idempotence and fixpoint", grad_criterion},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                out.pass ? "" : " — ", out.detail.c_str());
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
