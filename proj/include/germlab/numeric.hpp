#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "germlab/polynomial.hpp"

namespace germlab {

using Point = std::vector<std::complex<double>>;

/// Polynomial system with its formal Jacobian, converted once to floating
/// coefficients for repeated evaluation.
class NumericSystem {
 public:
  explicit NumericSystem(const std::vector<Polynomial>& equations);

  std::size_t equations() const { return f_.size(); }
  std::size_t variables() const { return n_; }

  Eigen::VectorXcd value(const Point& x) const;
  Eigen::MatrixXcd jacobian(const Point& x) const;

 private:
  struct Term {
    std::vector<int> exponents;
    std::complex<double> coefficient;
  };
  using Sparse = std::vector<Term>;
  static Sparse compile(const Polynomial& p);
  static std::complex<double> eval(const Sparse& p, const Point& x);

  std::size_t n_ = 0;
  std::vector<Sparse> f_;
  std::vector<std::vector<Sparse>> df_;
};

struct SolveResult {
  Point x;
  double residual = 0;
  int iterations = 0;
  bool converged = false;
};

/// Damped Newton with minimum-norm steps (works for under-determined systems).
SolveResult solve_holomorphic(const NumericSystem& system, Point x0, double tolerance = 1e-12,
                              int max_iterations = 100);

double norm(const Point& x);

/// sigma_min / max(1, sigma_max) of the Jacobian (row rank test that also
/// sees a vanishing gradient of a single equation).
double jacobian_rank_ratio(const NumericSystem& system, const Point& x);

}  // namespace germlab
