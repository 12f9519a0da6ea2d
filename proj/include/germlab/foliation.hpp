#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "germlab/germ.hpp"
#include "germlab/numeric.hpp"

namespace germlab {

/// A point s of Link[X_0] in the sorted coordinates of the system.
struct LinkSample {
  Point s;
  double residual = 0;
  double distance_to_sigma = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
};

struct LinkOptions {
  double tolerance = 1e-10;
  int max_iterations = 60;
  /// Attempts per requested sample before giving up.
  int attempts_factor = 100;
};

struct LinkSampling {
  std::vector<LinkSample> samples;
  std::vector<std::string> warnings;
};

/// Sampled link of the positive-dimensional components of Sigma, used for
/// distances. Coordinate-subspace components are handled in closed form.
class SigmaLink {
 public:
  SigmaLink() = default;
  SigmaLink(const GermSystem& system, const ObstructionLocus& locus, std::uint64_t seed,
            int samples_per_component = 400);

  bool empty() const { return coordinate_.empty() && sampled_.empty(); }
  double distance(const Point& s) const;

 private:
  std::vector<std::vector<std::size_t>> coordinate_;
  std::vector<Point> sampled_;
};

/// Random unit vectors pushed onto V(f_p) by min-norm Newton, then moved back
/// to the unit sphere along the weighted C^* orbit (which preserves V(f_p)).
LinkSampling sample_link(const GermSystem& system, std::size_t count, std::uint64_t seed,
                         const LinkOptions& options = {}, const SigmaLink* sigma_link = nullptr);

/// Projects one starting point onto V(generators) & S; nullopt on failure.
std::optional<Point> project_to_link(const NumericSystem& equations, const WeightVector& weights,
                                     Point start, const LinkOptions& options = {});

/// Moves s along lambda^w s (lambda > 0) onto the unit sphere.
Point weighted_normalize(const Point& s, const WeightVector& weights);

/// d_j = sum_{i <= r(j)} |s_i|^2 where r(j) is the end of the weight block of j.
std::vector<double> block_factors(const WeightVector& weights, const Point& s);

/// r x N, column j of grad f_p at s multiplied by sqrt(d_j).
Eigen::MatrixXcd rescaled_gradient(const GermSystem& system, const Point& s);

/// det(A A^*) for A the rescaled gradient, i.e. sum of |r x r minors|^2.
double cauchy_binet(const Eigen::MatrixXcd& rescaled);

struct ArcOptions {
  double tolerance = 1e-11;
  int max_iterations = 40;
  /// Upper bound on |eps h|; larger deformations count as divergence.
  double max_deformation = 1.0;
  /// |eps h| must also stay below this fraction of distance_to_sigma: past it
  /// the deformation reaches the region where the rescaled gradient degenerates.
  double relative_deformation = 0.5;
  /// Samples with distance_to_sigma at or below this are rejected.
  double sigma_exclusion = 0.0;
  bool allow_large_epsilon = false;
  bool record_history = false;
};

struct ArcSample {
  LinkSample s;
  std::complex<double> epsilon;
  std::vector<double> t_grid;
  std::vector<Eigen::VectorXcd> z_values;
  std::vector<Point> points;
  std::vector<double> residuals;
  std::vector<bool> converged;
  std::vector<int> iterations;
  /// Newton residual sequence per grid point (only with record_history).
  std::vector<std::vector<double>> history;
  double cauchy_binet = 0;
  std::string failure;

  bool all_converged() const;
  std::size_t converged_count() const;
};

/// 2^-1, 2^-2, ..., 2^-levels.
std::vector<double> default_t_grid(int levels = 20);

/// gamma(t) = t^w (s + eps h), h = diag(d) conj(grad f_p(s))^T z, with z found
/// by Newton on t^{-p}(f_p + eps f_{>p})(gamma(t)) = 0 down the grid.
ArcSample deform_arc(const GermSystem& system, std::complex<double> epsilon, const LinkSample& s,
                     const std::vector<double>& t_grid, const ArcOptions& options = {});

/// max_i |(f_{p_i} + eps f_{>p_i})(x)| / t^{p_i}, evaluated from the exact
/// polynomials.
double scaled_residual(const GermSystem& system, std::complex<double> epsilon, const Point& x,
                       double t);

struct TangencyEstimate {
  double alpha = 0;
  double r2 = 0;
  double t_min = 0;
  double t_max = 0;
  std::size_t points = 0;
};

/// Least-squares slope of log|a(t) - b(t)| against log|a(t)| over the
/// smallest-t window of common points. Identical arcs give +infinity.
/// Throws ValidationError for fewer than `min_points` usable points.
TangencyEstimate tangency_exponent(const std::vector<double>& t, const std::vector<Point>& a,
                                   const std::vector<Point>& b, std::size_t window = 8,
                                   std::size_t min_points = 6);
TangencyEstimate tangency_exponent(const ArcSample& a, const ArcSample& b, std::size_t window = 8);

struct FoliationOptions {
  ArcOptions arc;
  LinkOptions link;
  std::vector<double> t_grid = default_t_grid();
  std::size_t pairs = 20;
  double tangency_margin = 0.05;
  double fit_tolerance = 0.05;
  double separation = 1e-8;
  std::uint64_t seed = 0;
};

struct PropertyCheck {
  std::string name;
  bool passed = true;
  std::size_t tested = 0;
  std::vector<std::string> offenders;
};

struct FoliationReport {
  std::complex<double> epsilon;
  std::vector<ArcSample> arcs;
  std::vector<ArcSample> unperturbed;
  std::vector<TangencyEstimate> deformation_tangency;
  std::optional<Rational> delta;
  double exponent_threshold = 1;
  std::vector<PropertyCheck> checks;
  std::size_t converged_arcs = 0;
  bool passed = false;
};

/// Deforms the arcs through every sample and checks tangency dichotomy,
/// separation, coordinate-plane preservation and the tord bound against the
/// unperturbed arcs. Throws ValidationError for fewer than two samples.
FoliationReport verify_foliation(const GermSystem& system, std::complex<double> epsilon,
                                 const std::vector<LinkSample>& samples,
                                 const FoliationOptions& options = {});

/// seed, s_k re/im, eps re/im, t, point_k re/im, residual, converged.
void write_arc_csv(std::ostream& out, const GermSystem& system, const std::vector<ArcSample>& arcs);

}  // namespace germlab
