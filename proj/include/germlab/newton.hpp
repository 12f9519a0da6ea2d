#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germlab/groebner.hpp"
#include "germlab/polynomial.hpp"
#include "germlab/weights.hpp"

namespace germlab {

/// Compact face of the Newton polyhedron conv(supp f) + R^N_{>=0}.
struct Face {
  int dim = 0;
  /// Extreme points of the face.
  std::vector<Monomial> vertices;
  /// Every support point lying on the face (vertices included).
  std::vector<Monomial> points;
  /// Primitive, strictly positive. For facets the unique inner normal; for
  /// lower-dimensional faces the primitive sum of the containing facet normals.
  std::vector<long> inner_normal;
  long level = 0;
  /// inner_normal / level, so that f_sigma has weighted degree 1.
  WeightVector weights;
};

struct NewtonDiagram {
  std::size_t ambient_dim = 0;
  std::vector<Monomial> support;
  /// All compact faces, sorted by descending dimension, then by normal.
  std::vector<Face> faces;
  bool convenient = false;

  std::vector<const Face*> top_faces() const;
};

/// Brute-force facet enumeration over affinely independent point subsets.
/// Throws ValidationError for f = 0 or f(0) != 0.
NewtonDiagram newton_diagram(const Polynomial& f);

/// Terms of f on the face. Throws ValidationError when the face does not
/// belong to the diagram of f.
Polynomial face_restriction(const Polynomial& f, const Face& face);

enum class Degeneracy { Nondegenerate, Degenerate, Undetermined };

struct FaceDegeneracy {
  Degeneracy status = Degeneracy::Undetermined;
  bool probabilistic = false;
  std::string evidence;
};

struct NondegeneracyReport {
  std::vector<FaceDegeneracy> faces;  // parallel to NewtonDiagram::faces
  /// Conjunction; nullopt when some face is undetermined.
  std::optional<bool> overall;
  bool probabilistic = false;
};

struct NondegeneracyOptions {
  GroebnerOptions groebner;
  /// Fall back to torus sampling for faces that exhaust the exact budget.
  bool probabilistic_fallback = false;
  std::uint64_t seed = 0;
  int probabilistic_starts = 64;
};

/// Exact check: f_sigma has no critical point on the torus iff saturating its
/// partials by x_1...x_N gives the unit ideal. Throws ValidationError when f
/// is not convenient.
NondegeneracyReport is_newton_nondegenerate(const Polynomial& f, const NewtonDiagram& diagram,
                                            const NondegeneracyOptions& options = {});

/// Searches for torus critical points of f_sigma with Newton's method from
/// random starts. True when none was found.
bool probabilistic_face_check(const Polynomial& f_sigma, std::uint64_t seed, int starts,
                              std::string* evidence = nullptr);

struct FaceWeightSummary {
  std::size_t face_index = 0;  // into NewtonDiagram::faces
  std::vector<Rational> sorted_weights;
  /// Variable index of each sorted weight.
  std::vector<std::size_t> sorted_variables;
  std::size_t lowest_multiplicity = 0;
  bool two_lowest_coincide = false;
};

std::vector<FaceWeightSummary> face_weight_report(const NewtonDiagram& diagram);

}  // namespace germlab
