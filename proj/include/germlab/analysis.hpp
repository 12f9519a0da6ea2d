#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germlab/germ.hpp"
#include "germlab/newton.hpp"

namespace germlab {

enum class Verdict { FastCycleFound, NoObstructionFound, HypothesesUnverified };
enum class HypothesisStatus { Verified, Failed, UserAsserted, Unchecked };

std::string to_string(Verdict v);
std::string to_string(HypothesisStatus s);

struct Hypothesis {
  std::string id;
  std::string statement;
  HypothesisStatus status = HypothesisStatus::Unchecked;
  std::string evidence;

  bool holds() const {
    return status == HypothesisStatus::Verified || status == HypothesisStatus::UserAsserted;
  }
};

struct Certificate {
  /// Lower bound for the real dimension of the fast cycle.
  int dimension_lower_bound = 0;
  int l = 0;
  std::string homotopy;
  /// Milnor number of X & V(x_1) (hypersurface slices only).
  std::optional<std::size_t> milnor_number;
  std::string milnor_note;
  /// Tangent cone lies in Span(x_1..x_{r_1}).
  std::size_t tangent_cone_dim_bound = 0;
  ExponentBound exponent;
  std::string route;
};

struct Assumptions {
  bool milnor_fibre = false;
  bool noncontractible_component = false;
};

struct AnalysisOptions {
  GroebnerOptions groebner;
  std::uint64_t seed = 0;
  Assumptions assumptions;
};

struct AnalysisReport {
  Verdict verdict = Verdict::HypothesesUnverified;
  std::vector<Hypothesis> ledger;
  std::optional<Certificate> certificate;
  std::optional<int> l;
  /// "w_1 = 1/3 < w_2 = 1/2" or similar; empty when l is unknown.
  std::string criterion;
  std::string summary;
  /// Slice values t_0 drawn for hypothesis (d).
  std::vector<Rational> slice_values;
};

AnalysisReport analyze(const GermSystem& system, const AnalysisOptions& options = {});

struct FaceVerdict {
  std::size_t face_index = 0;
  Verdict verdict = Verdict::HypothesesUnverified;
  std::optional<int> sing_dimension;
  bool sing_condition = false;
  bool lower_weights_coincide = false;
  std::string evidence;
};

struct NewtonAnalysis {
  NewtonDiagram diagram;
  NondegeneracyReport nondegeneracy;
  std::vector<FaceWeightSummary> weights;
  std::vector<FaceVerdict> faces;
  Verdict verdict = Verdict::HypothesesUnverified;
  std::string note;
  /// Single top face: the germ analysed as a perturbation of f_sigma.
  std::optional<AnalysisReport> single_face;
  std::optional<GermSystem> single_face_system;
};

struct NewtonOptions {
  AnalysisOptions analysis;
  bool probabilistic_nnd = false;
};

/// Throws ValidationError when f is not convenient.
NewtonAnalysis analyze_newton(const Polynomial& f, const NewtonOptions& options = {});

}  // namespace germlab
