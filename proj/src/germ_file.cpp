#include "germlab/germ_file.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "germlab/error.hpp"
#include "germlab/parser.hpp"

namespace germlab {

namespace {

using json = nlohmann::ordered_json;

const char* const kKnownKeys[] = {"variables", "equations", "split", "weights", "assumptions",
                                  "name",      "comment"};

std::vector<std::string> string_list(const json& j, const std::string& key) {
  if (!j.is_array()) throw ValidationError("'" + key + "' must be a list of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ValidationError("'" + key + "' must be a list of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts,
                                  const std::vector<std::string>& vars, const std::string& key) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      out.push_back(parse_polynomial(texts[i], vars));
    } catch (const ParseError& e) {
      throw ParseError(key + "[" + std::to_string(i) + "]: " + std::string(e.what()).substr(0,
                           std::string(e.what()).rfind(" at position")),
                       e.position());
    }
  }
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  static const std::regex re(R"(\s*([+-]?\d+)\s*(/\s*(\d+)\s*)?)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) {
    throw ValidationError("not a rational number: '" + text + "'");
  }
  Rational r(m[1].str(), 10);
  if (m[3].matched) {
    Rational den(m[3].str(), 10);
    if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
    r /= den;
  }
  r.canonicalize();
  return r;
}

GermFile parse_germ_file(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!j.is_object()) throw ValidationError("germ file must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kKnownKeys) known = known || key == k;
    if (!known) throw ValidationError("unknown key '" + key + "'");
  }

  GermFile f;
  f.source = j;
  if (!j.contains("variables")) throw ValidationError("missing 'variables'");
  f.variables = string_list(j["variables"], "variables");
  validate_variable_names(f.variables);

  const bool has_eq = j.contains("equations");
  f.has_split = j.contains("split");
  if (has_eq == f.has_split) {
    throw ValidationError("exactly one of 'equations' or 'split' must be present");
  }
  if (has_eq) {
    f.equations = string_list(j["equations"], "equations");
    if (f.equations.empty()) throw ValidationError("'equations' is empty");
  } else {
    const auto& s = j["split"];
    if (!s.is_object() || !s.contains("principal") || !s.contains("perturbation")) {
      throw ValidationError("'split' needs 'principal' and 'perturbation'");
    }
    f.principal = string_list(s["principal"], "principal");
    f.perturbation = string_list(s["perturbation"], "perturbation");
    if (f.principal.empty() || f.principal.size() != f.perturbation.size()) {
      throw ValidationError("'principal' and 'perturbation' must be non-empty and of equal length");
    }
  }
  // Polynomial syntax is checked eagerly so that errors surface at load time.
  parse_all(has_eq ? f.equations : f.principal, f.variables, has_eq ? "equations" : "principal");
  if (!has_eq) parse_all(f.perturbation, f.variables, "perturbation");

  if (j.contains("weights")) {
    const auto& w = j["weights"];
    if (!w.is_array() || w.size() != f.variables.size()) {
      throw ValidationError("'weights' must list one weight per variable");
    }
    std::vector<Rational> ws;
    for (const auto& v : w) {
      if (v.is_string()) {
        ws.push_back(parse_rational(v.get<std::string>()));
      } else if (v.is_number_integer()) {
        ws.push_back(Rational(v.get<long>()));
      } else {
        throw ValidationError("weights must be strings 'a/b' or integers");
      }
    }
    f.weights = WeightVector(ws);
  }
  if (j.contains("assumptions")) {
    f.assumptions = string_list(j["assumptions"], "assumptions");
    for (const auto& a : f.assumptions) {
      if (a != "milnor-fibre" && a != "noncontractible-component") {
        throw ValidationError("unknown assumption '" + a +
                              "' (known: milnor-fibre, noncontractible-component)");
      }
    }
  }
  return f;
}

GermFile load_germ_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_germ_file(ss.str());
}

GermSystem build_system(const GermFile& file) {
  if (!file.has_split) {
    auto eqs = parse_all(file.equations, file.variables, "equations");
    try {
      return make_germ_system_from_equations(file.variables, eqs, file.weights);
    } catch (const WeightInferenceError& e) {
      throw ValidationError(std::string(e.what()) +
                            "; supply 'weights' or give an explicit 'split'");
    }
  }
  return make_germ_system(file.variables, parse_all(file.principal, file.variables, "principal"),
                          parse_all(file.perturbation, file.variables, "perturbation"),
                          file.weights);
}

std::vector<Polynomial> full_equations(const GermFile& file) {
  if (!file.has_split) return parse_all(file.equations, file.variables, "equations");
  auto p = parse_all(file.principal, file.variables, "principal");
  auto q = parse_all(file.perturbation, file.variables, "perturbation");
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = p[i] + q[i];
  return p;
}

Assumptions file_assumptions(const GermFile& file) {
  Assumptions a;
  for (const auto& s : file.assumptions) {
    if (s == "milnor-fibre") a.milnor_fibre = true;
    if (s == "noncontractible-component") a.noncontractible_component = true;
  }
  return a;
}

}  // namespace germlab
