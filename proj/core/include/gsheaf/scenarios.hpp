#pragma once

#include <optional>
#include <vector>

#include "gsheaf/stability.hpp"

namespace gsheaf::scen {

using filt::Weight;

/// span(e) ⊂ span(h, e) ⊂ sl₂ in the basis (h, e, f).
filt::WeightedFlag sl2_borel_flag(Weight low = -1, Weight mid = 0, Weight high = 1);

/// Rank-2 sheaf F on P² with (c1, c2) = (1, 2) and its adjoint E = End⁰F.
struct Example1Report {
  Rational c2_adF;
  long gm_moduli_dim = 0;
  long quot_dim = 0;
  /// c2 of O ⊕ O(1)⊗I_p, the class of the exhibited extension.
  Rational extension_class_c2;
  Rational declared_c2;
  bool discrepancy = false;
};
Example1Report example1_report();

/// F = L ⊕ M ⊗ I_p numerically on the blown-up plane, with L = O(sR),
/// M = O(−cD + (c+s)R), and E = End⁰F filtered by
/// E_{−1} = M^∨⊗L ⊂ E_0 = ker(E → L^∨⊗M⊗I_Z) ⊂ E, colength(Z) = 3.
struct Example2Classes {
  geom::SheafClass L, M, F, E, E_minus, E_zero;
};
Example2Classes example2_classes(long c, long s);
stab::GSheafModel example2_model(long c, long s);

struct Example2Report {
  long c = 0;
  long s = 0;
  Rational slope_F;
  Poly gieseker_poly;  // P_L − P_F/2
  EventualSign gieseker_sign = EventualSign::Zero;
  /// 3c² + (2s−1)c + 2.
  Rational closed_form;
  /// gieseker constant / (closed_form / 2) when the latter is nonzero.
  std::optional<Rational> factor_vs_printed;
  Poly pE_poly;
  stab::Status vb_verdict = stab::Status::Stable;
  stab::Status pb_verdict = stab::Status::Stable;
};
Example2Report example2_report(long c, long s);

struct TableRow {
  Example2Report report;
  stab::Status printed_vector;
  stab::Status printed_principal;
  bool vector_agrees() const { return report.vb_verdict == printed_vector; }
  bool principal_agrees() const { return report.pb_verdict == printed_principal; }
};
std::vector<TableRow> example2_table();

/// O(1) ⊕ O ⊕ O(−1) = End⁰(O(1) ⊕ O) on P², with its HN filtration as the
/// only candidate (fiber flag: the Borel flag with the HN weights).
stab::GSheafModel hn_split_model();

/// Every model the scenarios build: the table rows, c = 3, and the split model.
std::vector<stab::GSheafModel> scenario_models();

}  // namespace gsheaf::scen
