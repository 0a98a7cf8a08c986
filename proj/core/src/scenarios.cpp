#include "gsheaf/scenarios.hpp"

#include "gsheaf/error.hpp"

namespace gsheaf::scen {

using geom::SheafClass;

filt::WeightedFlag sl2_borel_flag(Weight low, Weight mid, Weight high) {
  const Vector h = unit_vector(3, 0), e = unit_vector(3, 1);
  return filt::WeightedFlag({low, mid, high},
                            {Subspace::span(3, {e}), Subspace::span(3, {h, e}), Subspace::whole(3)});
}

Example1Report example1_report() {
  const auto X = geom::p2();
  const Vector c1{Rational(1)};
  Example1Report out;
  out.declared_c2 = Rational(2);
  const SheafClass F{2, c1, geom::ch2_from_c2(X, c1, out.declared_c2), "F"};
  out.c2_adF = geom::c2_from_ch(X, geom::end0_class(X, F));
  out.gm_moduli_dim = geom::moduli_dim_gm(X, 2, c1, out.declared_c2);
  out.quot_dim = geom::quot_dim(3, 4);
  const SheafClass extension = geom::sum_class(
      {geom::structure_sheaf(X), geom::point_twist(geom::line_bundle(X, c1, "O(1)"), 1)});
  out.extension_class_c2 = geom::c2_from_ch(X, extension);
  out.discrepancy = out.extension_class_c2 != out.declared_c2;
  return out;
}

Example2Classes example2_classes(long c, long s) {
  const auto X = geom::blowup_p2();
  Example2Classes k;
  k.L = geom::line_bundle(X, {Rational(0), Rational(s)}, "L");
  k.M = geom::line_bundle(X, {Rational(-c), Rational(c + s)}, "M");
  k.F = geom::point_twist(geom::sum_class({k.L, k.M}), 1);
  k.F.label = "F";
  k.E = geom::end0_class(X, k.F);
  k.E.label = "E";
  k.E_minus = geom::tensor_class(X, geom::dual_class(k.M), k.L);
  k.E_minus.label = "E_-1";
  const SheafClass quotient = geom::point_twist(geom::tensor_class(X, geom::dual_class(k.L), k.M), 3);
  k.E_zero = geom::difference_class(k.E, quotient);
  k.E_zero.label = "E_0";
  return k;
}

stab::GSheafModel example2_model(long c, long s) {
  const auto k = example2_classes(c, s);
  stab::SheafFiltrationSpec spec{{-1, 0, 1}, {k.E_minus, k.E_zero, k.E}, sl2_borel_flag()};
  stab::GSheafModel model{geom::blowup_p2(), k.E, lie::sl(2), {spec}, {k.E}, {}};
  model.validate();
  return model;
}

Example2Report example2_report(long c, long s) {
  const auto X = geom::blowup_p2();
  const auto k = example2_classes(c, s);
  Example2Report out;
  out.c = c;
  out.s = s;
  out.slope_F = geom::slope(X, k.F);
  out.gieseker_poly = geom::hilbert_poly(X, k.L) - Rational(1, 2) * geom::hilbert_poly(X, k.F);
  out.gieseker_sign = eventual_sign(out.gieseker_poly);
  out.closed_form = Rational(3 * c * c + (2 * s - 1) * c + 2);
  if (!out.closed_form.is_zero()) {
    out.factor_vs_printed = out.gieseker_poly.coefficient(0) / (out.closed_form / Rational(2));
  }
  const auto model = example2_model(c, s);
  out.pE_poly = stab::filtration_hilbert(X, model.candidates.front(), model.total);
  if (out.gieseker_poly.degree() > 0 || out.pE_poly.degree() > 0) {
    throw MathError("internal: blown-up plane scenario polynomials are expected to be constant");
  }
  out.vb_verdict = stab::check_gieseker_pair(X, k.F, k.L).status;
  out.pb_verdict = stab::check_gsheaf(model).status;
  return out;
}

std::vector<TableRow> example2_table() {
  using stab::Status;
  struct Printed {
    long c, s;
    Status vector, principal;
  };
  static const Printed printed[] = {
      {-1, 4, Status::Unstable, Status::Unstable},
      {-1, 3, Status::StrictlySemistable, Status::Unstable},
      {-1, 2, Status::Stable, Status::Unstable},
      {3, -4, Status::Unstable, Status::StrictlySemistable},
      {3, -5, Status::Stable, Status::StrictlySemistable},
      {4, -5, Status::Unstable, Status::Stable},
      {4, -6, Status::Stable, Status::Stable},
  };
  std::vector<TableRow> rows;
  for (const auto& p : printed) rows.push_back({example2_report(p.c, p.s), p.vector, p.principal});
  return rows;
}

stab::GSheafModel hn_split_model() {
  const auto X = geom::p2();
  const std::vector<SheafClass> summands{geom::line_bundle(X, {Rational(1)}, "O(1)"), geom::structure_sheaf(X),
                                         geom::line_bundle(X, {Rational(-1)}, "O(-1)")};
  stab::SheafFiltrationSpec hn = stab::hn_filtration(X, summands);
  if (hn.weights.size() != 3) throw MathError("internal: split model HN filtration has the wrong length");
  hn.fiber_flag = sl2_borel_flag(hn.weights[0], hn.weights[1], hn.weights[2]);
  stab::GSheafModel model{X, geom::sum_class(summands), lie::sl(2), {hn}, summands, {}};
  model.total.label = "E";
  model.candidates.front().classes.back().label = "E";
  model.validate();
  return model;
}

std::vector<stab::GSheafModel> scenario_models() {
  std::vector<stab::GSheafModel> models;
  for (const auto& row : example2_table()) models.push_back(example2_model(row.report.c, row.report.s));
  models.push_back(example2_model(3, 0));
  models.push_back(hn_split_model());
  return models;
}

}  // namespace gsheaf::scen
