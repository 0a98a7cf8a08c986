#include "gsheaf/stability.hpp"

#include <algorithm>
#include <map>

#include "gsheaf/error.hpp"

namespace gsheaf::stab {

namespace {

using geom::SheafClass;

bool class_less(const SheafClass& a, const SheafClass& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  if (a.c1 != b.c1) return std::lexicographical_compare(a.c1.begin(), a.c1.end(), b.c1.begin(), b.c1.end());
  return a.ch2 < b.ch2;
}

Weight factorial(long n) {
  Weight f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Candidates with their tested polynomials → verdict. Unstable when some
/// polynomial is eventually positive, Stable when all are eventually
/// negative; the certificate is the first eventually-maximal candidate.
StabilityVerdict classify(const std::vector<std::pair<const SheafFiltrationSpec*, Poly>>& tested) {
  StabilityVerdict out;
  if (tested.empty()) return out;
  std::size_t best = 0;
  for (std::size_t i = 1; i < tested.size(); ++i) {
    if (eventual_compare(tested[i].second, tested[best].second) == EventualSign::Positive) best = i;
  }
  out.certificate = *tested[best].first;
  out.polynomial = tested[best].second;
  switch (eventual_sign(out.polynomial)) {
    case EventualSign::Positive: out.status = Status::Unstable; break;
    case EventualSign::Zero: out.status = Status::StrictlySemistable; break;
    case EventualSign::Negative: out.status = Status::Stable; break;
  }
  return out;
}

std::string describe(std::size_t index) { return "candidate " + std::to_string(index); }

/// Balanced algebra candidates only; the rest become warnings.
std::vector<const SheafFiltrationSpec*> algebra_candidates(const GSheafModel& model, std::vector<std::string>& warnings) {
  std::vector<const SheafFiltrationSpec*> kept;
  for (std::size_t i = 0; i < model.candidates.size(); ++i) {
    const auto& spec = model.candidates[i];
    if (!spec.fiber_flag) throw MathError(describe(i) + " has no fiber flag");
    if (spec.trivial()) continue;
    if (!filt::is_balanced(*spec.fiber_flag)) {
      warnings.push_back(describe(i) + " skipped: fiber flag is not balanced");
    } else if (!filt::is_algebra_filtration(model.fiber, *spec.fiber_flag)) {
      warnings.push_back(describe(i) + " skipped: fiber flag is not an algebra filtration");
    } else {
      kept.push_back(&spec);
    }
  }
  return kept;
}

}  // namespace

void SheafFiltrationSpec::validate(const SheafClass& total) const {
  if (weights.empty()) throw MathError("filtration has no steps");
  if (weights.size() != classes.size()) throw MathError("filtration weight count does not match class count");
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (weights[i] <= weights[i - 1]) throw MathError("filtration weights must be strictly increasing");
    if (classes[i].rank <= classes[i - 1].rank) throw MathError("filtration ranks must be strictly increasing");
  }
  if (classes.front().rank <= 0) throw MathError("first filtration step must have positive rank");
  if (!(classes.back() == total)) throw MathError("last filtration step must equal the total class");
  if (fiber_flag) {
    if (fiber_flag->weights() != weights) throw MathError("fiber flag weights differ from the filtration weights");
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (static_cast<long>(fiber_flag->steps()[i].dim()) != classes[i].rank) {
        throw MathError("fiber flag step dimensions differ from the filtration ranks");
      }
    }
  }
}

void GSheafModel::validate() const {
  surface.validate();
  if (total.rank != static_cast<long>(fiber.dim())) throw MathError("rank of E must equal the fiber dimension");
  if (!geom::degree(surface, total).is_zero()) throw MathError("E must have degree 0");
  if (!lie::is_semisimple(fiber)) throw MathError("fiber algebra is not semisimple");
  for (const auto& spec : candidates) {
    spec.validate(total);
    if (spec.fiber_flag && spec.fiber_flag->ambient_dim() != fiber.dim()) {
      throw MathError("fiber flag does not live in the fiber algebra");
    }
  }
  if (!summands.empty() && !(geom::sum_class(summands) == total)) {
    throw MathError("summands do not add up to the total class");
  }
  for (const auto& d : tau) {
    if (d.size() != surface.picard_rank()) throw MathError("tau class has the wrong length");
  }
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Stable: return "stable";
    case Status::StrictlySemistable: return "strictly-semistable";
    case Status::Unstable: return "unstable";
  }
  return "?";
}

Poly filtration_hilbert(const geom::SurfaceModel& X, const SheafFiltrationSpec& spec, const SheafClass& total) {
  spec.validate(total);
  const Rational r(total.rank);
  const Poly p = geom::hilbert_poly(X, total);
  Poly out;
  for (std::size_t i = 0; i + 1 < spec.weights.size(); ++i) {
    if (spec.classes[i].rank >= total.rank) throw MathError("proper filtration step has full rank");
    const Rational gap(spec.weights[i + 1] - spec.weights[i]);
    out += gap * (r * geom::hilbert_poly(X, spec.classes[i]) - Rational(spec.classes[i].rank) * p);
  }
  return out;
}

Rational filtration_degree(const geom::SurfaceModel& X, const SheafFiltrationSpec& spec, const SheafClass& total) {
  spec.validate(total);
  const Rational r(total.rank);
  const Rational d = geom::degree(X, total);
  Rational out;
  for (std::size_t i = 0; i + 1 < spec.weights.size(); ++i) {
    if (spec.classes[i].rank >= total.rank) throw MathError("proper filtration step has full rank");
    const Rational gap(spec.weights[i + 1] - spec.weights[i]);
    out += gap * (r * geom::degree(X, spec.classes[i]) - Rational(spec.classes[i].rank) * d);
  }
  return out;
}

StabilityVerdict check_gsheaf(const GSheafModel& model) {
  std::vector<std::string> warnings;
  std::vector<std::pair<const SheafFiltrationSpec*, Poly>> tested;
  for (const auto* spec : algebra_candidates(model, warnings)) {
    tested.emplace_back(spec, filtration_hilbert(model.surface, *spec, model.total));
  }
  StabilityVerdict out = classify(tested);
  out.warnings = std::move(warnings);
  return out;
}

StabilityVerdict check_tensor(const GSheafModel& model, const Poly& delta) {
  const int want = model.surface.dim - 1;
  if (delta.degree() != want || delta.leading().sign() <= 0) {
    throw MathError("δ must have degree " + std::to_string(want) + " and a positive leading coefficient");
  }
  std::vector<std::string> warnings;
  std::vector<std::pair<const SheafFiltrationSpec*, Poly>> tested;
  for (std::size_t i = 0; i < model.candidates.size(); ++i) {
    const auto& spec = model.candidates[i];
    if (!spec.fiber_flag) throw MathError(describe(i) + " has no fiber flag");
    if (spec.trivial()) continue;
    if (!filt::is_balanced(*spec.fiber_flag)) {
      warnings.push_back(describe(i) + " skipped: fiber flag is not balanced");
      continue;
    }
    const Rational mu(filt::mu_bracket(model.fiber, *spec.fiber_flag));
    tested.emplace_back(&spec, filtration_hilbert(model.surface, spec, model.total) + mu * delta);
  }
  StabilityVerdict out = classify(tested);
  out.warnings = std::move(warnings);
  return out;
}

StabilityVerdict check_slope(const GSheafModel& model) {
  std::vector<std::string> warnings;
  std::vector<std::pair<const SheafFiltrationSpec*, Poly>> tested;
  for (const auto* spec : algebra_candidates(model, warnings)) {
    tested.emplace_back(spec, Poly::constant(filtration_degree(model.surface, *spec, model.total)));
  }
  StabilityVerdict out = classify(tested);
  out.warnings = std::move(warnings);
  return out;
}

StabilityVerdict check_gieseker_pair(const geom::SurfaceModel& X, const SheafClass& total, const SheafClass& sub) {
  if (sub.rank <= 0 || sub.rank >= total.rank) throw MathError("subsheaf rank must lie strictly between 0 and the total rank");
  const Poly p = Rational(1, sub.rank) * geom::hilbert_poly(X, sub) - Rational(1, total.rank) * geom::hilbert_poly(X, total);
  SheafFiltrationSpec spec{{0, 1}, {sub, total}, std::nullopt};
  return classify({{&spec, p}});
}

SheafFiltrationSpec hn_filtration(const geom::SurfaceModel& X, const std::vector<SheafClass>& summands) {
  if (summands.empty()) throw MathError("HN filtration of an empty sum");
  std::map<Rational, std::vector<SheafClass>, std::greater<>> groups;
  long r = 0;
  for (const auto& s : summands) {
    if (s.rank < 1) throw MathError("summands must have positive rank");
    groups[geom::slope(X, s)].push_back(s);
    r += s.rank;
  }
  const Rational scale(factorial(r));
  SheafFiltrationSpec spec;
  std::vector<SheafClass> acc;
  for (const auto& [mu, group] : groups) {
    acc.insert(acc.end(), group.begin(), group.end());
    const Rational w = -scale * mu;
    if (!w.is_integer()) throw MathError("HN weight is not integral");
    spec.weights.push_back(w.to_long());
    spec.classes.push_back(geom::sum_class(acc));
  }
  return spec;
}

std::vector<std::pair<Rational, Rational>> hn_polygon(const geom::SurfaceModel& X, const std::vector<SheafClass>& summands) {
  const SheafFiltrationSpec spec = hn_filtration(X, summands);
  std::vector<std::pair<Rational, Rational>> vertices{{Rational(0), Rational(0)}};
  for (const auto& c : spec.classes) vertices.emplace_back(Rational(c.rank), geom::degree(X, c));
  return vertices;
}

bool is_strictly_convex(const std::vector<std::pair<Rational, Rational>>& polygon) {
  std::optional<Rational> previous;
  for (std::size_t i = 1; i < polygon.size(); ++i) {
    const Rational run = polygon[i].first - polygon[i - 1].first;
    if (run.sign() <= 0) return false;
    const Rational edge = (polygon[i].second - polygon[i - 1].second) / run;
    if (previous && !(edge < *previous)) return false;
    previous = edge;
  }
  return true;
}

GSheafModel admissible_deformation(const GSheafModel& model, const SheafFiltrationSpec& spec) {
  if (!spec.fiber_flag || spec.trivial() || !filt::is_balanced(*spec.fiber_flag) ||
      !filt::is_algebra_filtration(model.fiber, *spec.fiber_flag) ||
      eventual_sign(filtration_hilbert(model.surface, spec, model.total)) != EventualSign::Zero) {
    throw MathError("filtration not admissible");
  }
  const auto split = filt::GradedSplitting::echelon(*spec.fiber_flag);
  const std::size_t r = model.fiber.dim();

  GSheafModel out{model.surface, model.total, filt::graded_limit(model.fiber, *spec.fiber_flag, split), {}, {}, model.tau};
  SheafClass previous{0, zero_vector(model.surface.picard_rank()), Rational(0), {}};
  for (const auto& c : spec.classes) {
    out.summands.push_back(geom::difference_class(c, previous));
    out.summands.back().label = "gr(" + c.label + ")";
    previous = c;
  }

  // Candidate fiber flags move to the adapted basis of the graded object.
  const auto to_adapted = inverse(Matrix::from_columns(split.adapted_basis(), r));
  for (const auto& cand : model.candidates) {
    SheafFiltrationSpec moved = cand;
    if (cand.fiber_flag) {
      std::vector<Subspace> steps;
      for (const auto& step : cand.fiber_flag->steps()) {
        std::vector<Vector> rows;
        for (const auto& b : step.basis()) rows.push_back(to_adapted->apply(b));
        steps.push_back(Subspace::span(r, rows));
      }
      moved.fiber_flag = filt::WeightedFlag(cand.fiber_flag->weights(), std::move(steps));
    }
    out.candidates.push_back(std::move(moved));
  }
  return out;
}

CanonicalForm canonical_form(const GSheafModel& model) {
  CanonicalForm form;
  form.summands = model.summands.empty() ? std::vector<SheafClass>{model.total} : model.summands;
  std::sort(form.summands.begin(), form.summands.end(), class_less);
  form.constants = model.fiber.upper_constants();
  return form;
}

GradResult grad(const GSheafModel& model) {
  if (check_gsheaf(model).status == Status::Unstable) throw MathError("grad requires a semistable model");
  GradResult result{model, 0};
  const std::size_t bound = model.fiber.dim() + 1;
  for (std::size_t round = 0; round < bound; ++round) {
    const SheafFiltrationSpec* admissible = nullptr;
    std::vector<std::string> ignored;
    for (const auto* spec : algebra_candidates(result.model, ignored)) {
      if (eventual_sign(filtration_hilbert(result.model.surface, *spec, result.model.total)) == EventualSign::Zero) {
        admissible = spec;
        break;
      }
    }
    if (!admissible) break;
    GSheafModel next = admissible_deformation(result.model, *admissible);
    if (canonical_form(next) == canonical_form(result.model)) break;
    result.model = std::move(next);
    ++result.iterations;
  }
  return result;
}

bool s_equivalent(const GSheafModel& a, const GSheafModel& b) {
  return canonical_form(grad(a).model) == canonical_form(grad(b).model);
}

}  // namespace gsheaf::stab
