#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "gsheaf/corpus.hpp"
#include "gsheaf/error.hpp"
#include "gsheaf/io.hpp"

namespace gsheaf::cli {

namespace {

using io::json;

/// One report, rendered either as text lines or as a JSON document.
struct Report {
  std::vector<std::string> lines;
  json data = json::object();

  void line(std::string text) { lines.push_back(std::move(text)); }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Text reports say "semistable" for the equality case.
std::string verdict_word(stab::Status s) {
  return s == stab::Status::StrictlySemistable ? "semistable" : stab::to_string(s);
}

std::string join(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

template <typename T>
std::string join_ints(const std::vector<T>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

std::string span_text(const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) out += (i ? ", " : "") + join(s.basis()[i]);
  return out + "}";
}

const std::string& require_input(const Command& cmd) {
  if (!cmd.input_path) throw ParseError(cmd.subcommand + ": --input is required");
  return *cmd.input_path;
}

void describe_spec(Report& r, const std::string& prefix, const stab::SheafFiltrationSpec& spec) {
  r.line(prefix + " weights: " + join_ints(spec.weights));
  for (const auto& c : spec.classes) {
    r.line(prefix + " step " + (c.label.empty() ? "-" : c.label) + ": rank " + std::to_string(c.rank) +
           ", c1 " + join(c.c1) + ", ch2 " + c.ch2.to_string());
  }
}

void describe_verdict(Report& r, const std::string& name, const stab::StabilityVerdict& v) {
  r.line(name + ": " + verdict_word(v.status));
  r.line(name + " polynomial: " + v.polynomial.to_string());
  if (v.status == stab::Status::Unstable && v.certificate) describe_spec(r, name + " certificate", *v.certificate);
  for (const auto& w : v.warnings) r.line(name + " warning: " + w);
}

Report lie_check(const Command& cmd) {
  const auto g = io::parse_lie_algebra(io::read_file(require_input(cmd)));
  const auto inv = lie::killing_invariants(g);
  const bool semisimple = !inv.det.is_zero();
  Report r;
  r.line("dim: " + std::to_string(g.dim()));
  r.line("antisymmetric: yes");
  r.line("jacobi: " + yes_no(lie::check_jacobi(g.dim(), g.table())));
  r.line("semisimple: " + yes_no(semisimple));
  r.line("det κ = " + inv.det.to_string());
  r.line("κ signature: (" + std::to_string(inv.signature.positive) + ", " + std::to_string(inv.signature.negative) +
         ", " + std::to_string(inv.signature.zero) + ")");
  r.data = {{"dim", g.dim()},
            {"antisymmetric", true},
            {"jacobi", true},
            {"semisimple", semisimple},
            {"killing_det", io::to_json(inv.det)},
            {"signature", {inv.signature.positive, inv.signature.negative, inv.signature.zero}}};
  return r;
}

Report killing(const Command& cmd) {
  const auto g = io::parse_lie_algebra(io::read_file(require_input(cmd)));
  const Matrix k = lie::killing_matrix(g);
  const Rational det = determinant(k);
  Report r;
  for (std::size_t i = 0; i < k.rows(); ++i) r.line("κ[" + g.labels()[i] + "] = " + join(k.row(i)));
  r.line("det κ = " + det.to_string());
  r.data = {{"killing", io::to_json(k)}, {"det", io::to_json(det)}, {"labels", g.labels()}};
  return r;
}

/// Flag file, or with --seed a random balanced flag of the input's algebra (sl₂ without input).
io::FlagFile load_flag(const Command& cmd) {
  if (!cmd.seed) return io::parse_flag_file(io::read_file(require_input(cmd)));
  lie::LieAlgebra g = lie::sl(2);
  if (cmd.input_path) {
    const json j = io::read_file(*cmd.input_path);
    g = j.is_object() && j.contains("algebra") ? io::parse_lie_algebra(j["algebra"], "$.algebra") : io::parse_lie_algebra(j);
  }
  auto flag = filt::random_flag(g, *cmd.seed);
  return io::FlagFile{std::move(g), std::move(flag)};
}

Report filt_analyze(const Command& cmd) {
  const auto [g, flag] = load_flag(cmd);
  const bool balanced = filt::is_balanced(flag);
  const bool algebra = filt::is_algebra_filtration(g, flag);
  std::optional<bool> orthogonal;
  if (lie::is_semisimple(g)) orthogonal = filt::is_orthogonal_filtration(g, flag);
  const auto mu = filt::mu_bracket(g, flag);
  const auto mu_tens = filt::mu_tensor(g, flag);
  Report r;
  r.line("weights: " + join_ints(flag.weights()));
  r.line("piece dims: " + join_ints(flag.piece_dims()));
  r.line("balanced: " + yes_no(balanced));
  r.line("algebra: " + yes_no(algebra));
  r.line("orthogonal: " + (orthogonal ? yes_no(*orthogonal) : std::string("n/a (algebra not semisimple)")));
  r.line("μ = " + std::to_string(mu));
  r.line("μ_tens = " + std::to_string(mu_tens));
  r.data = {{"flag", io::to_json(flag)},
            {"balanced", balanced},
            {"algebra", algebra},
            {"orthogonal", orthogonal ? json(*orthogonal) : json(nullptr)},
            {"mu", mu},
            {"mu_tens", mu_tens}};
  return r;
}

Report parab_roundtrip(const Command& cmd) {
  const auto [g, flag] = load_flag(cmd);
  const auto data = parab::parabolic_from_filtration(g, flag);
  const auto back = parab::filtration_from_element(g, data.v);
  const auto dual = parab::killing_dual(g, data.parabolic, data.character, data.eigengrading.at(0));
  std::vector<filt::Weight> negated;
  for (const auto& [alpha, space] : data.eigengrading) {
    if (!space.is_zero()) negated.insert(negated.begin(), -alpha);
  }
  const bool agrees = back == flag;
  const bool weights_match = negated == flag.weights();
  const bool dual_matches = dual == data.v;
  Report r;
  r.line("v = " + join(data.v));
  for (const auto& [alpha, space] : data.eigengrading) r.line("eigenspace " + std::to_string(alpha) + ": " + span_text(space));
  r.line("parabolic: " + span_text(data.parabolic));
  r.line("character: " + join(data.character));
  r.line("roundtrip: " + yes_no(agrees));
  r.line("weights = −eigenvalues: " + yes_no(weights_match));
  r.line("killing dual recovers v: " + yes_no(dual_matches));
  r.data = io::to_json(data);
  r.data["roundtrip"] = agrees;
  r.data["weights_match"] = weights_match;
  r.data["killing_dual_matches"] = dual_matches;
  return r;
}

Report stab_check(const Command& cmd) {
  const auto model = io::parse_model(io::read_file(require_input(cmd)));
  // δ = m on surfaces, 1 on curves.
  const Poly delta = Poly::monomial(Rational(1), static_cast<std::size_t>(model.surface.dim - 1));
  const auto gsheaf = stab::check_gsheaf(model);
  const auto tensor = stab::check_tensor(model, delta);
  const auto slope = stab::check_slope(model);
  Report r;
  describe_verdict(r, "gsheaf", gsheaf);
  describe_verdict(r, "tensor", tensor);
  r.line("tensor δ: " + delta.to_string());
  describe_verdict(r, "slope", slope);
  r.data = {{"gsheaf", io::to_json(gsheaf)},
            {"tensor", io::to_json(tensor)},
            {"delta", io::to_json(delta)},
            {"slope", io::to_json(slope)}};
  return r;
}

Report hn(const Command& cmd) {
  const auto split = io::parse_split_file(io::read_file(require_input(cmd)));
  const auto spec = stab::hn_filtration(split.surface, split.summands);
  const auto polygon = stab::hn_polygon(split.surface, split.summands);
  const bool convex = stab::is_strictly_convex(polygon);
  Report r;
  describe_spec(r, "hn", spec);
  json vertices = json::array();
  std::string poly_text;
  for (const auto& [rank, deg] : polygon) {
    poly_text += (poly_text.empty() ? "" : " ") + ("(" + rank.to_string() + ", " + deg.to_string() + ")");
    vertices.push_back({io::to_json(rank), io::to_json(deg)});
  }
  r.line("polygon: " + poly_text);
  r.line("strictly convex: " + yes_no(convex));
  r.data = {{"filtration", io::to_json(spec)}, {"polygon", vertices}, {"strictly_convex", convex}};
  return r;
}

Report grad(const Command& cmd) {
  const auto model = io::parse_model(io::read_file(require_input(cmd)));
  const auto result = stab::grad(model);
  const Rational det = determinant(lie::killing_matrix(result.model.fiber));
  Report r;
  r.line("iterations: " + std::to_string(result.iterations));
  for (const auto& s : stab::canonical_form(result.model).summands) {
    r.line("summand: rank " + std::to_string(s.rank) + ", c1 " + join(s.c1) + ", ch2 " + s.ch2.to_string());
  }
  for (const auto& c : result.model.fiber.upper_constants()) {
    const auto& labels = result.model.fiber.labels();
    r.line("[" + labels[c.l] + ", " + labels[c.m] + "] ∋ " + c.value.to_string() + "·" + labels[c.n]);
  }
  r.line("det κ = " + det.to_string());
  r.data = {{"iterations", result.iterations}, {"model", io::to_json(result.model)}, {"killing_det", io::to_json(det)}};
  return r;
}

Report example1(const Command&) {
  const auto e = scen::example1_report();
  Report r;
  r.line("c2(End⁰F) = " + e.c2_adF.to_string());
  r.line("Gieseker moduli dimension: " + std::to_string(e.gm_moduli_dim));
  r.line("Quot dimension: " + std::to_string(e.quot_dim));
  r.line("extension class c2 = " + e.extension_class_c2.to_string() + " (declared c2 = " + e.declared_c2.to_string() + ")");
  r.line("discrepancy: " + yes_no(e.discrepancy));
  r.data = io::to_json(e);
  return r;
}

Report example2(const Command& cmd) {
  if (!cmd.c || !cmd.s) throw ParseError("example2: --c and --s are required");
  const auto e = scen::example2_report(*cmd.c, *cmd.s);
  Report r;
  r.line("vector: " + verdict_word(e.vb_verdict) + ", principal: " + verdict_word(e.pb_verdict));
  r.line("slope F = " + e.slope_F.to_string());
  r.line("P_L − P_F/2 = " + e.gieseker_poly.to_string());
  r.line("3c² + (2s−1)c + 2 = " + e.closed_form.to_string());
  r.line("P_E• = " + e.pE_poly.to_string());
  r.data = io::to_json(e);
  return r;
}

Report table(const Command&) {
  Report r;
  r.data = json::array();
  for (const auto& row : scen::example2_table()) {
    const auto& e = row.report;
    std::string text = "(" + std::to_string(e.c) + "," + std::to_string(e.s) + ") vector: " + verdict_word(e.vb_verdict) +
                       ", principal: " + verdict_word(e.pb_verdict);
    if (!row.vector_agrees() || !row.principal_agrees()) {
      text += " [reference: " + verdict_word(row.printed_vector) + ", " + verdict_word(row.printed_principal) + "]";
    }
    r.line(text);
    r.data.push_back(io::to_json(row));
  }
  return r;
}

const std::map<std::string, std::function<Report(const Command&)>>& dispatch() {
  static const std::map<std::string, std::function<Report(const Command&)>> table_ = {
      {"lie-check", lie_check}, {"killing", killing}, {"filt-analyze", filt_analyze},
      {"parab-roundtrip", parab_roundtrip}, {"stab-check", stab_check}, {"hn", hn},
      {"grad", grad}, {"example1", example1}, {"example2", example2}, {"table", table}};
  return table_;
}

}  // namespace

Outcome run(const Command& command) {
  const auto it = dispatch().find(command.subcommand);
  if (it == dispatch().end()) return {2, "error: unknown subcommand '" + command.subcommand + "'"};
  try {
    const Report report = it->second(command);
    if (command.format == Format::Structured) return {0, report.data.dump(2) + "\n"};
    std::string text;
    for (const auto& l : report.lines) text += l + "\n";
    return {0, text};
  } catch (const ParseError& e) {
    return {2, std::string("error: ") + e.what()};
  } catch (const MathError& e) {
    return {1, std::string("error: ") + e.what()};
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stability of Lie-algebra-valued sheaves by exact computation", "gsheaf"};
  Command cmd;
  std::string format = "text";
  app.add_option("--input", cmd.input_path, "Input JSON file");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", cmd.seed, "Seed for randomized flags");
  app.add_option("--c", cmd.c, "Blown-up plane scenario: exceptional coefficient c");
  app.add_option("--s", cmd.s, "Blown-up plane scenario: fiber coefficient s");
  app.require_subcommand(1);
  const std::pair<const char*, const char*> subcommands[] = {
      {"lie-check", "Validate a Lie-algebra file"},
      {"killing", "Killing matrix and determinant"},
      {"filt-analyze", "Flag predicates and both μ weights"},
      {"parab-roundtrip", "Filtration ↔ parabolic round trip"},
      {"stab-check", "All stability tests on a model file"},
      {"hn", "Harder–Narasimhan filtration of a split sheaf"},
      {"grad", "Iterated admissible deformation"},
      {"example1", "Rank-2 sheaf on P²"},
      {"example2", "Blown-up plane scenario (needs --c, --s)"},
      {"table", "Verdict table of the blown-up plane scenario"}};
  for (const auto& [name, help] : subcommands) app.add_subcommand(name, help)->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  cmd.subcommand = app.get_subcommands().front()->get_name();
  cmd.format = format == "structured" ? Format::Structured : Format::Text;
  const Outcome outcome = run(cmd);
  (outcome.status == 0 ? out : err) << outcome.report << (outcome.status == 0 ? "" : "\n");
  return outcome.status;
}

}  // namespace gsheaf::cli
