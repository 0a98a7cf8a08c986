#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsheaf/flag.hpp"
#include "gsheaf/lie_algebra.hpp"
#include "gsheaf/parabolic.hpp"
#include "gsheaf/poly.hpp"
#include "gsheaf/rational.hpp"
#include "gsheaf/scenarios.hpp"
#include "gsheaf/stability.hpp"
#include "gsheaf/surface.hpp"

/// JSON formats. Parsers throw ParseError naming the offending field path
/// (e.g. "$.candidates[0].classes[1].ch2"); structurally valid input that
/// violates a mathematical invariant raises MathError from the owning module.
namespace gsheaf::io {

using json = nlohmann::json;

/// Reads and parses a JSON file; ParseError on I/O or syntax errors.
json read_file(const std::string& path);

Rational parse_rational(const json& j, const std::string& path = "$");
Vector parse_vector(const json& j, const std::string& path = "$");
Poly parse_poly(const json& j, const std::string& path = "$");

/// { "dim": r, "labels": [...], "constants": [[l, m, n, "p/q"], ...] } with l < m,
/// or a builder name "sl2", "sl3", ... ("sl(n)" also accepted).
lie::LieAlgebra parse_lie_algebra(const json& j, const std::string& path = "$");
/// { "weights": [...], "steps": [[row, ...], ...] }; steps may be given by any spanning rows.
filt::WeightedFlag parse_flag(const json& j, const std::string& path = "$");
/// { "rank": p, "intersection": [[...]], "K": [...], "H": [...], "chiO": "p/q" },
/// optional "dim"/"genus" for curves, or a builder name "p2" / "blowup_p2".
geom::SurfaceModel parse_surface(const json& j, const std::string& path = "$");
geom::SheafClass parse_sheaf_class(const json& j, const std::string& path = "$");
stab::SheafFiltrationSpec parse_spec(const json& j, const std::string& path = "$");
/// { "surface", "total", "fiber", "candidates", "tau"?, "summands"? }; validated.
stab::GSheafModel parse_model(const json& j, const std::string& path = "$");

/// Flag file with its algebra embedded under "algebra".
struct FlagFile {
  lie::LieAlgebra algebra;
  filt::WeightedFlag flag;
};
FlagFile parse_flag_file(const json& j);

/// { "surface": ..., "summands": [classes] } for split sheaves.
struct SplitFile {
  geom::SurfaceModel surface;
  std::vector<geom::SheafClass> summands;
};
SplitFile parse_split_file(const json& j);

json to_json(const Rational& q);
json to_json(const Vector& v);
json to_json(const Poly& p);
json to_json(const Subspace& s);
json to_json(const Matrix& m);
json to_json(const lie::LieAlgebra& g);
json to_json(const filt::WeightedFlag& f);
json to_json(const geom::SurfaceModel& X);
json to_json(const geom::SheafClass& c);
json to_json(const stab::SheafFiltrationSpec& s);
json to_json(const stab::GSheafModel& m);
json to_json(const stab::StabilityVerdict& v);
json to_json(const parab::ParabolicData& d);
json to_json(const scen::Example1Report& r);
json to_json(const scen::Example2Report& r);
json to_json(const scen::TableRow& r);

}  // namespace gsheaf::io
