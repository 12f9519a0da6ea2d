#include "germlab/commands.hpp"

#include <chrono>
#include <cmath>
#include <regex>
#include <sstream>

#include "germlab/error.hpp"
#include "germlab/groebner.hpp"

namespace germlab {

namespace {

using json = nlohmann::ordered_json;

json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return nullptr;
  return v;
}

json complex_json(std::complex<double> c) { return json::array({c.real(), c.imag()}); }

json point_json(const Point& p) {
  json a = json::array();
  for (auto c : p) a.push_back(complex_json(c));
  return a;
}

json polys(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

json rationals(const std::vector<Rational>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(r.get_str());
  return a;
}

json monomial_json(const Monomial& m) {
  json a = json::array();
  for (std::size_t k = 0; k < m.arity(); ++k) a.push_back(m[k]);
  return a;
}

std::string degeneracy_name(Degeneracy d) {
  switch (d) {
    case Degeneracy::Nondegenerate:
      return "nondegenerate";
    case Degeneracy::Degenerate:
      return "degenerate";
    case Degeneracy::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

AnalysisOptions analysis_options(const GermFile& file, const CommandOptions& o) {
  AnalysisOptions a;
  if (o.budget) a.groebner.budget = *o.budget;
  a.seed = o.seed;
  a.assumptions = file_assumptions(file);
  a.assumptions.milnor_fibre = a.assumptions.milnor_fibre || o.assume_milnor_fibre;
  a.assumptions.noncontractible_component =
      a.assumptions.noncontractible_component || o.assume_noncontractible_component;
  return a;
}

Polynomial single_equation(const GermFile& file, const std::string& command) {
  auto eqs = full_equations(file);
  if (eqs.size() != 1) throw ValidationError(command + " needs exactly one equation");
  return eqs.front();
}

}  // namespace

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::FastCycleFound:
      return exit_code::fast_cycle;
    case Verdict::NoObstructionFound:
      return exit_code::no_obstruction;
    case Verdict::HypothesesUnverified:
      return exit_code::unverified;
  }
  return exit_code::unverified;
}

std::complex<double> parse_epsilon(const std::string& text) {
  static const std::regex decimal(R"(\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*)");
  if (std::regex_match(text, decimal) && text.find_first_of(".eE") != std::string::npos) {
    return std::stod(text);
  }
  return parse_rational(text).get_d();
}

json to_json(const GermSystem& s) {
  json j;
  j["variables"] = s.variables;
  j["original_variables"] = s.original_variables;
  j["permutation"] = s.original_index;
  j["weights"] = s.weights.to_strings();
  j["degrees"] = rationals(s.degrees);
  j["n"] = s.n;
  j["c"] = s.c;
  j["principal"] = polys(s.principal);
  j["perturbation"] = polys(s.perturbation);
  json kinds = json::array();
  for (auto k : s.perturbation_kinds) kinds.push_back(to_string(k));
  j["perturbation_kinds"] = kinds;
  return j;
}

json to_json(const AnalysisReport& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["summary"] = r.summary;
  j["l"] = optional_int(r.l);
  j["criterion"] = r.criterion;
  json ledger = json::array();
  for (const auto& h : r.ledger) {
    ledger.push_back({{"id", h.id},
                      {"hypothesis", h.statement},
                      {"status", to_string(h.status)},
                      {"evidence", h.evidence}});
  }
  j["hypothesis_ledger"] = ledger;
  if (r.certificate) {
    const auto& c = *r.certificate;
    j["certificate"] = {
        {"route", c.route},
        {"fast_cycle_dimension_at_least", c.dimension_lower_bound},
        {"l", c.l},
        {"homotopy", c.homotopy},
        {"milnor_number", c.milnor_number ? json(*c.milnor_number) : json(nullptr)},
        {"milnor_note", c.milnor_note},
        {"tangent_cone_dimension_at_most", c.tangent_cone_dim_bound},
        {"exponent_lower_bound", c.exponent.value.get_str()},
        {"exponent_nontrivial", c.exponent.nontrivial},
        {"exponent_formula", c.exponent.formula},
    };
  } else {
    j["certificate"] = nullptr;
  }
  j["slice_values"] = rationals(r.slice_values);
  return j;
}

json to_json(const ObstructionLocus& locus, const std::vector<std::string>& vars) {
  json comps = json::array();
  for (const auto& c : locus.components) {
    json v = json::array();
    for (auto k : c.vanishing_variables) v.push_back(vars[k]);
    comps.push_back({{"label", c.label},
                     {"cut", c.cut},
                     {"generators", polys(c.generators)},
                     {"dimension", optional_int(c.dimension)},
                     {"undetermined", !c.dimension.has_value()},
                     {"coordinate_subspace",
                      c.coordinate_subspace ? json(*c.coordinate_subspace) : json(nullptr)},
                     {"vanishing_variables", v},
                     {"basis_size", c.basis.size()}});
  }
  json j;
  j["components"] = comps;
  j["total_dim"] = optional_int(locus.total_dim);
  j["is_origin_only"] = locus.is_origin_only ? json(*locus.is_origin_only) : json(nullptr);
  return j;
}

json to_json(const NewtonAnalysis& a, const std::vector<std::string>& vars) {
  json faces = json::array();
  for (std::size_t i = 0; i < a.diagram.faces.size(); ++i) {
    const auto& f = a.diagram.faces[i];
    json verts = json::array();
    for (const auto& m : f.vertices) verts.push_back(monomial_json(m));
    json pts = json::array();
    for (const auto& m : f.points) pts.push_back(monomial_json(m));
    const auto& nd = a.nondegeneracy.faces[i];
    faces.push_back({{"index", i},
                     {"dim", f.dim},
                     {"vertices", verts},
                     {"points", pts},
                     {"inner_normal", f.inner_normal},
                     {"level", f.level},
                     {"weights", f.weights.to_strings()},
                     {"nondegeneracy", degeneracy_name(nd.status)},
                     {"probabilistic", nd.probabilistic},
                     {"evidence", nd.evidence}});
  }
  json top = json::array();
  for (std::size_t k = 0; k < a.weights.size(); ++k) {
    const auto& w = a.weights[k];
    const auto& fv = a.faces[k];
    json names = json::array();
    for (auto v : w.sorted_variables) names.push_back(vars[v]);
    const bool n2 = vars.size() == 3;
    top.push_back({{"face", w.face_index},
                   {"sorted_weights", rationals(w.sorted_weights)},
                   {"sorted_variables", names},
                   {"lowest_multiplicity", w.lowest_multiplicity},
                   {"two_lowest_weights_differ", !w.two_lowest_coincide},
                   {"lower_weights_coincide", fv.lower_weights_coincide},
                   {"sing_dimension", optional_int(fv.sing_dimension)},
                   {"sing_condition", n2 ? json(true) : json(fv.sing_condition)},
                   {"verdict", to_string(fv.verdict)},
                   {"evidence", fv.evidence}});
  }
  json j;
  j["support"] = json::array();
  for (const auto& m : a.diagram.support) j["support"].push_back(monomial_json(m));
  j["convenient"] = a.diagram.convenient;
  j["faces"] = faces;
  j["nondegenerate"] =
      a.nondegeneracy.overall ? json(*a.nondegeneracy.overall) : json(nullptr);
  j["nondegeneracy_probabilistic"] = a.nondegeneracy.probabilistic;
  j["top_faces"] = top;
  j["verdict"] = to_string(a.verdict);
  j["note"] = a.note;
  if (a.single_face) {
    j["single_face_system"] = to_json(*a.single_face_system);
    j["single_face_analysis"] = to_json(*a.single_face);
  }
  return j;
}

json to_json(const FoliationReport& r) {
  json j;
  j["epsilon"] = complex_json(r.epsilon);
  j["delta"] = r.delta ? json(r.delta->get_str()) : json("inf");
  j["exponent_threshold"] = r.exponent_threshold;
  j["converged_arcs"] = r.converged_arcs;
  j["arc_count"] = r.arcs.size();
  json arcs = json::array();
  for (std::size_t i = 0; i < r.arcs.size(); ++i) {
    const auto& a = r.arcs[i];
    double worst = 0;
    for (std::size_t k = 0; k < a.residuals.size(); ++k) {
      if (a.converged[k]) worst = std::max(worst, a.residuals[k]);
    }
    const auto& t = r.deformation_tangency[i];
    arcs.push_back({{"index", i},
                    {"seed", a.s.seed},
                    {"s", point_json(a.s.s)},
                    {"link_residual", a.s.residual},
                    {"distance_to_sigma", number_or_inf(a.s.distance_to_sigma)},
                    {"cauchy_binet", a.cauchy_binet},
                    {"converged_points", a.converged_count()},
                    {"all_converged", a.all_converged()},
                    {"max_residual", worst},
                    {"failure", a.failure},
                    {"tord_unperturbed",
                     t.points ? json({{"alpha", number_or_inf(t.alpha)}, {"r2", t.r2},
                                      {"t_min", t.t_min}, {"t_max", t.t_max}})
                              : json(nullptr)}});
  }
  j["arcs"] = arcs;
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"tested", c.tested}, {"offenders", c.offenders}});
  }
  j["checks"] = checks;
  j["passed"] = r.passed;
  return j;
}

CommandResult run_command(const std::string& command, const GermFile& file,
                          const CommandOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult out;
  json& rep = out.report;
  rep["schema"] = kReportSchema;
  rep["tool"] = {{"name", "germlab"}, {"version", kVersion}};
  rep["command"] = command;
  rep["input_file"] = o.input_name;
  rep["input"] = file.source;
  rep["seed"] = o.seed;
  const auto aopt = analysis_options(file, o);
  rep["budget"] = aopt.groebner.budget;

  try {
    if (command == "analyze") {
      auto sys = build_system(file);
      rep["normalization"] = to_json(sys);
      auto report = analyze(sys, aopt);
      rep["analysis"] = to_json(report);
      rep["obstruction_locus"] = to_json(sigma(sys, aopt.groebner), sys.variables);
      out.exit_code = exit_code_for(report.verdict);
      out.text = to_string(report.verdict);
    } else if (command == "sigma") {
      auto sys = build_system(file);
      rep["normalization"] = to_json(sys);
      auto locus = sigma(sys, aopt.groebner);
      rep["obstruction_locus"] = to_json(locus, sys.variables);
      out.exit_code = locus.is_origin_only ? exit_code::no_obstruction : exit_code::unverified;
      out.text = locus.is_origin_only ? (*locus.is_origin_only ? "origin-only" : "positive-dimensional")
                                      : "undetermined";
    } else if (command == "newton") {
      auto f = single_equation(file, "newton");
      NewtonOptions nopt;
      nopt.analysis = aopt;
      nopt.probabilistic_nnd = o.probabilistic_nnd;
      auto na = analyze_newton(f, nopt);
      rep["newton"] = to_json(na, file.variables);
      out.exit_code = exit_code_for(na.verdict);
      out.text = to_string(na.verdict);
    } else if (command == "milnor") {
      auto f = single_equation(file, "milnor");
      auto mu = milnor_number_hypersurface(f, aopt.groebner);
      rep["milnor_number"] = mu ? json(*mu) : json("non-isolated");
      out.text = mu ? std::to_string(*mu) : "non-isolated";
      out.exit_code = exit_code::no_obstruction;
    } else if (command == "foliate") {
      auto sys = build_system(file);
      rep["normalization"] = to_json(sys);
      const auto eps = parse_epsilon(o.epsilon);
      auto locus = sigma(sys, aopt.groebner);
      rep["obstruction_locus"] = to_json(locus, sys.variables);
      SigmaLink sl(sys, locus, o.seed);
      auto link = sample_link(sys, o.samples, o.seed, {}, &sl);
      FoliationOptions fopt;
      fopt.seed = o.seed;
      fopt.arc.allow_large_epsilon = o.allow_large_epsilon;
      rep["link"] = {{"requested", o.samples},
                     {"found", link.samples.size()},
                     {"warnings", link.warnings}};
      json grid = json::array();
      for (double t : fopt.t_grid) grid.push_back(t);
      rep["t_grid"] = grid;
      if (link.samples.size() < 2) {
        rep["foliation"] = nullptr;
        rep["error"] = "fewer than two link samples";
        out.exit_code = exit_code::unverified;
      } else {
        auto fr = verify_foliation(sys, eps, link.samples, fopt);
        rep["foliation"] = to_json(fr);
        std::ostringstream csv;
        write_arc_csv(csv, sys, fr.arcs);
        out.csv = csv.str();
        out.exit_code = fr.passed ? exit_code::no_obstruction : exit_code::unverified;
        out.text = fr.passed ? "passed" : "failed";
      }
    } else {
      throw ValidationError("unknown command '" + command + "'");
    }
  } catch (const BudgetExhausted& e) {
    rep["error"] = e.what();
    out.exit_code = exit_code::unverified;
    out.text = "budget exhausted";
  }
  if (o.timing) {
    rep["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                 start)
                           .count();
  }
  return out;
}

}  // namespace germlab
