#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germlab/analysis.hpp"
#include "germlab/germ.hpp"
#include "json.hpp"

namespace germlab {

/// One germ per JSON object:
///   {"variables": ["x","y","z"],
///    "equations": ["x^2+y^2+z^3"]                     (auto split), or
///    "split": {"principal": [...], "perturbation": [...]},
///    "weights": ["1/2","1/2","1/3"],                  (optional)
///    "assumptions": ["milnor-fibre"]}                 (optional)
struct GermFile {
  std::vector<std::string> variables;
  std::vector<std::string> equations;
  std::vector<std::string> principal;
  std::vector<std::string> perturbation;
  bool has_split = false;
  std::optional<WeightVector> weights;
  std::vector<std::string> assumptions;
  nlohmann::ordered_json source;
};

/// Throws ValidationError (schema) or ParseError (polynomial syntax, JSON
/// syntax with byte offset).
GermFile parse_germ_file(const std::string& json_text);
GermFile load_germ_file(const std::string& path);

/// Accepts "a/b", "a" or a JSON integer.
Rational parse_rational(const std::string& text);

GermSystem build_system(const GermFile& file);

/// The full equations in the declared variable order (principal + perturbation
/// for split files).
std::vector<Polynomial> full_equations(const GermFile& file);

Assumptions file_assumptions(const GermFile& file);

}  // namespace germlab
