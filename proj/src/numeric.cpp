#include "germlab/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace germlab {

NumericSystem::Sparse NumericSystem::compile(const Polynomial& p) {
  Sparse out;
  for (const auto& [m, c] : p.terms()) {
    Term t;
    for (std::size_t k = 0; k < m.arity(); ++k) t.exponents.push_back(m[k]);
    t.coefficient = c.to_complex();
    out.push_back(std::move(t));
  }
  return out;
}

std::complex<double> NumericSystem::eval(const Sparse& p, const Point& x) {
  std::complex<double> s = 0;
  for (const auto& t : p) {
    std::complex<double> v = t.coefficient;
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      for (int e = 0; e < t.exponents[k]; ++e) v *= x[k];
    }
    s += v;
  }
  return s;
}

NumericSystem::NumericSystem(const std::vector<Polynomial>& equations) {
  n_ = equations.empty() ? 0 : equations.front().arity();
  for (const auto& f : equations) {
    f_.push_back(compile(f));
    std::vector<Sparse> row;
    for (std::size_t k = 0; k < n_; ++k) row.push_back(compile(f.derivative(k)));
    df_.push_back(std::move(row));
  }
}

Eigen::VectorXcd NumericSystem::value(const Point& x) const {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(f_.size()));
  for (std::size_t i = 0; i < f_.size(); ++i) v(static_cast<Eigen::Index>(i)) = eval(f_[i], x);
  return v;
}

Eigen::MatrixXcd NumericSystem::jacobian(const Point& x) const {
  Eigen::MatrixXcd J(static_cast<Eigen::Index>(f_.size()), static_cast<Eigen::Index>(n_));
  for (std::size_t i = 0; i < f_.size(); ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      J(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = eval(df_[i][k], x);
    }
  }
  return J;
}

double norm(const Point& x) {
  double s = 0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

SolveResult solve_holomorphic(const NumericSystem& system, Point x0, double tolerance,
                              int max_iterations) {
  SolveResult out;
  out.x = std::move(x0);
  Eigen::VectorXcd r = system.value(out.x);
  out.residual = r.norm();
  for (out.iterations = 0; out.iterations < max_iterations; ++out.iterations) {
    if (out.residual <= tolerance) {
      out.converged = true;
      return out;
    }
    Eigen::MatrixXcd J = system.jacobian(out.x);
    Eigen::VectorXcd step = J.completeOrthogonalDecomposition().solve(-r);
    if (!step.allFinite()) break;
    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 30; ++halving, lambda *= 0.5) {
      Point trial = out.x;
      for (std::size_t k = 0; k < trial.size(); ++k) {
        trial[k] += lambda * step(static_cast<Eigen::Index>(k));
      }
      Eigen::VectorXcd rt = system.value(trial);
      if (rt.norm() < out.residual || rt.norm() <= tolerance) {
        out.x = std::move(trial);
        r = rt;
        out.residual = rt.norm();
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  out.converged = out.residual <= tolerance;
  return out;
}

double jacobian_rank_ratio(const NumericSystem& system, const Point& x) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system.jacobian(x));
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  return s(s.size() - 1) / std::max(1.0, s(0));
}

}  // namespace germlab
