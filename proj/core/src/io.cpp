#include "gsheaf/io.hpp"

#include <fstream>
#include <limits>
#include <regex>

#include "gsheaf/error.hpp"

namespace gsheaf::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

std::string key(const std::string& path, const char* name) { return path + "." + name; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& field(const json& j, const std::string& path, const char* name) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(name);
  if (it == j.end()) fail(key(path, name), "missing field");
  return *it;
}

const json* optional_field(const json& j, const char* name) {
  const auto it = j.find(name);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::size_t count(const json& j, const std::string& path) {
  const long n = integer(j, path);
  if (n < 0) fail(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(n);
}

std::string text(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<filt::Weight> weights(const json& j, const std::string& path) {
  std::vector<filt::Weight> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(integer(j[i], index(path, i)));
  return out;
}

Vector sized_vector(const json& j, const std::string& path, std::size_t n) {
  Vector v = parse_vector(j, path);
  if (v.size() != n) fail(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  return v;
}

std::optional<std::size_t> builder_rank(const std::string& name) {
  static const std::regex pattern(R"(sl\(?(\d+)\)?)");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) return std::nullopt;
  return static_cast<std::size_t>(std::stoul(m[1]));
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Rational parse_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(path, "expected a rational \"p/q\" string or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  } catch (const MathError& e) {
    fail(path, e.what());
  }
}

Vector parse_vector(const json& j, const std::string& path) {
  Vector v;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) v.push_back(parse_rational(j[i], index(path, i)));
  return v;
}

Poly parse_poly(const json& j, const std::string& path) { return Poly(parse_vector(j, path)); }

lie::LieAlgebra parse_lie_algebra(const json& j, const std::string& path) {
  if (j.is_string()) {
    const auto n = builder_rank(j.get<std::string>());
    if (!n || *n < 2) fail(path, "unknown algebra builder '" + j.get<std::string>() + "'");
    return lie::sl(*n);
  }
  const std::size_t dim = count(field(j, path, "dim"), key(path, "dim"));
  if (dim == 0) fail(key(path, "dim"), "dimension must be positive");
  std::vector<std::string> labels;
  if (const json* l = optional_field(j, "labels")) {
    const std::string lp = key(path, "labels");
    for (std::size_t i = 0; i < array(*l, lp).size(); ++i) labels.push_back(text((*l)[i], index(lp, i)));
    if (labels.size() != dim) fail(lp, "expected " + std::to_string(dim) + " labels");
  }
  std::vector<lie::StructureConstant> upper;
  const std::string cp = key(path, "constants");
  const json& constants = array(field(j, path, "constants"), cp);
  for (std::size_t i = 0; i < constants.size(); ++i) {
    const std::string ep = index(cp, i);
    const json& entry = array(constants[i], ep);
    if (entry.size() != 4) fail(ep, "expected [l, m, n, value]");
    lie::StructureConstant sc{count(entry[0], index(ep, 0)), count(entry[1], index(ep, 1)), count(entry[2], index(ep, 2)),
                              parse_rational(entry[3], index(ep, 3))};
    if (sc.l >= dim || sc.m >= dim || sc.n >= dim) fail(ep, "basis index out of range");
    if (sc.l >= sc.m) fail(ep, "only entries with l < m may be stored");
    upper.push_back(sc);
  }
  return lie::LieAlgebra::from_upper(dim, upper, std::move(labels));
}

filt::WeightedFlag parse_flag(const json& j, const std::string& path) {
  const std::string wp = key(path, "weights"), sp = key(path, "steps");
  std::vector<filt::Weight> w = weights(field(j, path, "weights"), wp);
  const json& steps = array(field(j, path, "steps"), sp);
  if (steps.empty()) fail(sp, "a flag needs at least one step");
  std::vector<std::vector<Vector>> rows(steps.size());
  std::optional<std::size_t> ambient;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string stp = index(sp, i);
    for (std::size_t k = 0; k < array(steps[i], stp).size(); ++k) {
      const std::string rp = index(stp, k);
      Vector row = ambient ? sized_vector(steps[i][k], rp, *ambient) : parse_vector(steps[i][k], rp);
      ambient = row.size();
      rows[i].push_back(std::move(row));
    }
  }
  if (!ambient || *ambient == 0) fail(sp, "steps carry no vectors");
  std::vector<Subspace> subspaces;
  for (const auto& r : rows) subspaces.push_back(Subspace::span(*ambient, r));
  return filt::WeightedFlag(std::move(w), std::move(subspaces));
}

geom::SurfaceModel parse_surface(const json& j, const std::string& path) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "p2") return geom::p2();
    if (name == "blowup_p2") return geom::blowup_p2();
    fail(path, "unknown surface builder '" + name + "'");
  }
  geom::SurfaceModel X;
  if (const json* d = optional_field(j, "dim")) X.dim = static_cast<int>(integer(*d, key(path, "dim")));
  const std::size_t p = count(field(j, path, "rank"), key(path, "rank"));
  const std::string ip = key(path, "intersection");
  const json& rows = array(field(j, path, "intersection"), ip);
  if (rows.size() != p) fail(ip, "expected " + std::to_string(p) + " rows");
  std::vector<Vector> form;
  for (std::size_t i = 0; i < p; ++i) form.push_back(sized_vector(rows[i], index(ip, i), p));
  X.intersection = Matrix::from_rows(form, p);
  X.H = sized_vector(field(j, path, "H"), key(path, "H"), p);
  if (X.dim == 2) {
    X.K = sized_vector(field(j, path, "K"), key(path, "K"), p);
    X.chiO = parse_rational(field(j, path, "chiO"), key(path, "chiO"));
  } else {
    X.genus = integer(field(j, path, "genus"), key(path, "genus"));
    X.chiO = Rational(1 - X.genus);
  }
  X.validate();
  return X;
}

geom::SheafClass parse_sheaf_class(const json& j, const std::string& path) {
  geom::SheafClass c;
  c.rank = integer(field(j, path, "rank"), key(path, "rank"));
  if (c.rank < 0) fail(key(path, "rank"), "rank must be nonnegative");
  c.c1 = parse_vector(field(j, path, "c1"), key(path, "c1"));
  c.ch2 = parse_rational(field(j, path, "ch2"), key(path, "ch2"));
  if (const json* l = optional_field(j, "label")) c.label = text(*l, key(path, "label"));
  return c;
}

stab::SheafFiltrationSpec parse_spec(const json& j, const std::string& path) {
  stab::SheafFiltrationSpec spec;
  spec.weights = weights(field(j, path, "weights"), key(path, "weights"));
  const std::string cp = key(path, "classes");
  const json& classes = array(field(j, path, "classes"), cp);
  for (std::size_t i = 0; i < classes.size(); ++i) spec.classes.push_back(parse_sheaf_class(classes[i], index(cp, i)));
  if (const json* f = optional_field(j, "fiber_flag")) spec.fiber_flag = parse_flag(*f, key(path, "fiber_flag"));
  return spec;
}

stab::GSheafModel parse_model(const json& j, const std::string& path) {
  stab::GSheafModel model{parse_surface(field(j, path, "surface"), key(path, "surface")),
                          parse_sheaf_class(field(j, path, "total"), key(path, "total")),
                          parse_lie_algebra(field(j, path, "fiber"), key(path, "fiber")),
                          {}, {}, {}};
  const std::string cp = key(path, "candidates");
  const json& candidates = array(field(j, path, "candidates"), cp);
  for (std::size_t i = 0; i < candidates.size(); ++i) model.candidates.push_back(parse_spec(candidates[i], index(cp, i)));
  if (const json* s = optional_field(j, "summands")) {
    const std::string sp = key(path, "summands");
    for (std::size_t i = 0; i < array(*s, sp).size(); ++i) model.summands.push_back(parse_sheaf_class((*s)[i], index(sp, i)));
  } else {
    model.summands.push_back(model.total);
  }
  if (const json* t = optional_field(j, "tau")) {
    const std::string tp = key(path, "tau");
    for (std::size_t i = 0; i < array(*t, tp).size(); ++i) model.tau.push_back(parse_vector((*t)[i], index(tp, i)));
  }
  model.validate();
  return model;
}

FlagFile parse_flag_file(const json& j) {
  return FlagFile{parse_lie_algebra(field(j, "$", "algebra"), "$.algebra"), parse_flag(j, "$")};
}

SplitFile parse_split_file(const json& j) {
  SplitFile out{parse_surface(field(j, "$", "surface"), "$.surface"), {}};
  const json& summands = array(field(j, "$", "summands"), "$.summands");
  for (std::size_t i = 0; i < summands.size(); ++i) out.summands.push_back(parse_sheaf_class(summands[i], index("$.summands", i)));
  return out;
}

json to_json(const Rational& q) { return q.to_string(); }

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const Poly& p) { return to_json(p.coefficients()); }

json to_json(const Subspace& s) {
  json out = json::array();
  for (const auto& row : s.basis()) out.push_back(to_json(row));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const lie::LieAlgebra& g) {
  json constants = json::array();
  for (const auto& c : g.upper_constants()) constants.push_back({c.l, c.m, c.n, to_json(c.value)});
  return {{"dim", g.dim()}, {"labels", g.labels()}, {"constants", constants}};
}

json to_json(const filt::WeightedFlag& f) {
  json steps = json::array();
  for (const auto& s : f.steps()) steps.push_back(to_json(s));
  return {{"weights", f.weights()}, {"steps", steps}};
}

json to_json(const geom::SurfaceModel& X) {
  json out = {{"rank", X.picard_rank()}, {"intersection", to_json(X.intersection)}, {"H", to_json(X.H)}};
  if (X.dim == 2) {
    out["K"] = to_json(X.K);
    out["chiO"] = to_json(X.chiO);
  } else {
    out["dim"] = 1;
    out["genus"] = X.genus;
  }
  return out;
}

json to_json(const geom::SheafClass& c) {
  return {{"rank", c.rank}, {"c1", to_json(c.c1)}, {"ch2", to_json(c.ch2)}, {"label", c.label}};
}

json to_json(const stab::SheafFiltrationSpec& s) {
  json classes = json::array();
  for (const auto& c : s.classes) classes.push_back(to_json(c));
  json out = {{"weights", s.weights}, {"classes", classes}};
  if (s.fiber_flag) out["fiber_flag"] = to_json(*s.fiber_flag);
  return out;
}

json to_json(const stab::GSheafModel& m) {
  json candidates = json::array(), summands = json::array(), tau = json::array();
  for (const auto& c : m.candidates) candidates.push_back(to_json(c));
  for (const auto& s : m.summands) summands.push_back(to_json(s));
  for (const auto& t : m.tau) tau.push_back(to_json(t));
  return {{"surface", to_json(m.surface)}, {"total", to_json(m.total)}, {"fiber", to_json(m.fiber)},
          {"candidates", candidates}, {"summands", summands}, {"tau", tau}};
}

json to_json(const stab::StabilityVerdict& v) {
  json out = {{"status", stab::to_string(v.status)},
              {"certificate", v.certificate ? to_json(*v.certificate) : json(nullptr)},
              {"polynomial", to_json(v.polynomial)}};
  if (!v.warnings.empty()) out["warnings"] = v.warnings;
  return out;
}

json to_json(const parab::ParabolicData& d) {
  json eigenvalues = json::array(), eigenspaces = json::array();
  for (const auto& [alpha, space] : d.eigengrading) {
    eigenvalues.push_back(alpha);
    eigenspaces.push_back(to_json(space));
  }
  return {{"v", to_json(d.v)}, {"eigenvalues", eigenvalues}, {"eigenspaces", eigenspaces},
          {"parabolic", to_json(d.parabolic)}, {"character", to_json(d.character)}};
}

json to_json(const scen::Example1Report& r) {
  return {{"c2_adF", to_json(r.c2_adF)},
          {"gm_moduli_dim", r.gm_moduli_dim},
          {"quot_dim", r.quot_dim},
          {"extension_class_c2", to_json(r.extension_class_c2)},
          {"declared_c2", to_json(r.declared_c2)},
          {"discrepancy", r.discrepancy}};
}

json to_json(const scen::Example2Report& r) {
  return {{"c", r.c},
          {"s", r.s},
          {"slope_F", to_json(r.slope_F)},
          {"gieseker_poly", to_json(r.gieseker_poly)},
          {"gieseker_sign", to_string(r.gieseker_sign)},
          {"closed_form", to_json(r.closed_form)},
          {"factor_vs_printed", r.factor_vs_printed ? to_json(*r.factor_vs_printed) : json(nullptr)},
          {"pE_poly", to_json(r.pE_poly)},
          {"vb_verdict", stab::to_string(r.vb_verdict)},
          {"pb_verdict", stab::to_string(r.pb_verdict)}};
}

json to_json(const scen::TableRow& r) {
  json out = to_json(r.report);
  out["printed_vector"] = stab::to_string(r.printed_vector);
  out["printed_principal"] = stab::to_string(r.printed_principal);
  out["vector_agrees"] = r.vector_agrees();
  out["principal_agrees"] = r.principal_agrees();
  return out;
}

}  // namespace gsheaf::io
