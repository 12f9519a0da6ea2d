#include "germlab/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <random>

#include "germlab/error.hpp"

namespace germlab {

namespace {

using Complex = std::complex<double>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Point random_unit(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  Point p(n);
  for (auto& v : p) v = {g(rng), g(rng)};
  double s = norm(p);
  for (auto& v : p) v /= s;
  return p;
}

double max_abs(const Eigen::VectorXcd& v) {
  double m = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v(i)));
  return m;
}

double distance(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::norm(a[k] - b[k]);
  return std::sqrt(s);
}

// Terms of t^{-p_i} (f_{p_i} + eps f_{>p_i})(t^w y), with t-exponents
// <w,a> - p_i precomputed.
class ScaledSystem {
 public:
  ScaledSystem(const GermSystem& sys, Complex eps) : n_(sys.ambient_dim()) {
    for (std::size_t i = 0; i < sys.principal.size(); ++i) {
      std::vector<Term> eq;
      auto add = [&](const Polynomial& f, Complex scale) {
        for (const auto& [m, c] : f.terms()) {
          Term t;
          for (std::size_t k = 0; k < n_; ++k) t.a.push_back(m[k]);
          t.texp = Rational(weighted_degree(m, sys.weights) - sys.degrees[i]).get_d();
          t.c = scale * c.to_complex();
          eq.push_back(std::move(t));
        }
      };
      add(sys.principal[i], 1.0);
      if (eps != Complex(0)) add(sys.perturbation[i], eps);
      eqs_.push_back(std::move(eq));
    }
  }

  void set_t(double t) {
    for (auto& eq : eqs_) {
      for (auto& term : eq) term.tc = term.c * (term.texp == 0 ? 1.0 : std::pow(t, term.texp));
    }
  }

  Eigen::VectorXcd value(const Point& y) const {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(eqs_.size()));
    for (std::size_t i = 0; i < eqs_.size(); ++i) {
      Complex s = 0;
      for (const auto& term : eqs_[i]) s += term.tc * monomial(term.a, y);
      v(static_cast<Eigen::Index>(i)) = s;
    }
    return v;
  }

  Eigen::MatrixXcd jacobian(const Point& y) const {
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(eqs_.size()),
                                                static_cast<Eigen::Index>(n_));
    for (std::size_t i = 0; i < eqs_.size(); ++i) {
      for (const auto& term : eqs_[i]) {
        for (std::size_t k = 0; k < n_; ++k) {
          if (term.a[k] == 0) continue;
          auto a = term.a;
          --a[k];
          J(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) +=
              term.tc * static_cast<double>(term.a[k]) * monomial(a, y);
        }
      }
    }
    return J;
  }

 private:
  struct Term {
    std::vector<int> a;
    double texp = 0;
    Complex c, tc;
  };

  static Complex monomial(const std::vector<int>& a, const Point& y) {
    Complex v = 1;
    for (std::size_t k = 0; k < a.size(); ++k) {
      for (int e = 0; e < a[k]; ++e) v *= y[k];
    }
    return v;
  }

  std::size_t n_;
  std::vector<std::vector<Term>> eqs_;
};

}  // namespace

Point weighted_normalize(const Point& s, const WeightVector& weights) {
  auto sq = [&](double u) {
    double total = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      total += std::exp(2 * weights[j].get_d() * u) * std::norm(s[j]);
    }
    return total;
  };
  double lo = -200, hi = 200;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (sq(mid) < 1 ? lo : hi) = mid;
  }
  const double u = 0.5 * (lo + hi);
  Point out(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) out[j] = std::exp(weights[j].get_d() * u) * s[j];
  return out;
}

std::optional<Point> project_to_link(const NumericSystem& equations, const WeightVector& weights,
                                     Point start, const LinkOptions& options) {
  Point s = std::move(start);
  for (int round = 0; round < 6; ++round) {
    auto sol = solve_holomorphic(equations, s, 1e-3 * options.tolerance, options.max_iterations);
    if (norm(sol.x) < 1e-8) return std::nullopt;
    s = weighted_normalize(sol.x, weights);
    double r = max_abs(equations.value(s));
    if (r <= options.tolerance && std::abs(norm(s) - 1) <= 1e-12) return s;
  }
  return std::nullopt;
}

SigmaLink::SigmaLink(const GermSystem& system, const ObstructionLocus& locus, std::uint64_t seed,
                     int samples_per_component) {
  std::mt19937_64 rng(splitmix64(seed ^ 0x51a5ULL));
  for (const auto& comp : locus.components) {
    if (!comp.dimension || *comp.dimension <= 0) continue;
    if (comp.coordinate_subspace) {
      coordinate_.push_back(comp.vanishing_variables);
      continue;
    }
    NumericSystem ns(comp.basis);
    for (int k = 0; k < samples_per_component; ++k) {
      auto p = project_to_link(ns, system.weights, random_unit(rng, system.ambient_dim()));
      if (p) sampled_.push_back(*p);
    }
  }
}

double SigmaLink::distance(const Point& s) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& vanish : coordinate_) {
    double kept = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (std::find(vanish.begin(), vanish.end(), k) == vanish.end()) kept += std::norm(s[k]);
    }
    double rho = std::sqrt(kept);
    best = std::min(best, std::sqrt(std::max(0.0, 2 - 2 * rho)));
  }
  for (const auto& p : sampled_) best = std::min(best, germlab::distance(s, p));
  return best;
}

LinkSampling sample_link(const GermSystem& system, std::size_t count, std::uint64_t seed,
                         const LinkOptions& options, const SigmaLink* sigma_link) {
  LinkSampling out;
  if (count == 0) return out;
  NumericSystem ns(system.principal);
  const std::size_t attempts = count * static_cast<std::size_t>(options.attempts_factor);
  for (std::size_t attempt = 0; attempt < attempts && out.samples.size() < count; ++attempt) {
    const std::uint64_t sample_seed = splitmix64(seed * 0x100000001b3ULL + attempt);
    std::mt19937_64 rng(sample_seed);
    auto p = project_to_link(ns, system.weights, random_unit(rng, system.ambient_dim()), options);
    if (!p) continue;
    LinkSample ls;
    ls.s = *p;
    ls.residual = max_abs(ns.value(ls.s));
    ls.seed = sample_seed;
    if (sigma_link) ls.distance_to_sigma = sigma_link->distance(ls.s);
    out.samples.push_back(std::move(ls));
  }
  if (out.samples.size() < count) {
    out.warnings.push_back("only " + std::to_string(out.samples.size()) + " of " +
                           std::to_string(count) + " link samples found after " +
                           std::to_string(attempts) + " attempts");
  }
  return out;
}

std::vector<double> block_factors(const WeightVector& weights, const Point& s) {
  auto split = weight_splitting(weights);
  std::vector<double> d(s.size());
  std::size_t begin = 0;
  double partial = 0;
  for (auto end : split.breakpoints) {
    for (std::size_t i = begin; i < end; ++i) partial += std::norm(s[i]);
    for (std::size_t j = begin; j < end; ++j) d[j] = partial;
    begin = end;
  }
  return d;
}

Eigen::MatrixXcd rescaled_gradient(const GermSystem& system, const Point& s) {
  NumericSystem ns(system.principal);
  Eigen::MatrixXcd J = ns.jacobian(s);
  auto d = block_factors(system.weights, s);
  for (Eigen::Index j = 0; j < J.cols(); ++j) J.col(j) *= std::sqrt(d[static_cast<std::size_t>(j)]);
  return J;
}

double cauchy_binet(const Eigen::MatrixXcd& rescaled) {
  Eigen::MatrixXcd A = rescaled * rescaled.adjoint();
  return std::abs(A.determinant());
}

bool ArcSample::all_converged() const {
  return !converged.empty() && std::all_of(converged.begin(), converged.end(), [](bool b) { return b; });
}

std::size_t ArcSample::converged_count() const {
  return static_cast<std::size_t>(std::count(converged.begin(), converged.end(), true));
}

std::vector<double> default_t_grid(int levels) {
  std::vector<double> t;
  for (int k = 1; k <= levels; ++k) t.push_back(std::ldexp(1.0, -k));
  return t;
}

double scaled_residual(const GermSystem& system, std::complex<double> epsilon, const Point& x,
                       double t) {
  double worst = 0;
  for (std::size_t i = 0; i < system.principal.size(); ++i) {
    Complex v = evaluate_numeric(system.principal[i], x) +
                epsilon * evaluate_numeric(system.perturbation[i], x);
    worst = std::max(worst, std::abs(v) / std::pow(t, system.degrees[i].get_d()));
  }
  return worst;
}

ArcSample deform_arc(const GermSystem& system, std::complex<double> epsilon, const LinkSample& s,
                     const std::vector<double>& t_grid, const ArcOptions& options) {
  const std::size_t n = system.ambient_dim();
  if (s.s.size() != n) throw ArityError("link sample has the wrong number of coordinates");
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    if (!(t_grid[k] > 0) || (k > 0 && !(t_grid[k] < t_grid[k - 1]))) {
      throw ValidationError("t grid must be positive and strictly decreasing");
    }
  }
  if (system.has_same_order_terms() && std::abs(epsilon) > 0.1 && !options.allow_large_epsilon) {
    throw ValidationError("same-order perturbation requires |epsilon| <= 0.1");
  }
  if (s.distance_to_sigma <= options.sigma_exclusion) {
    throw ValidationError("link sample lies within the Sigma exclusion radius");
  }

  ArcSample arc;
  arc.s = s;
  arc.epsilon = epsilon;
  arc.t_grid = t_grid;

  Eigen::MatrixXcd grad = NumericSystem(system.principal).jacobian(s.s);
  auto d = block_factors(system.weights, s.s);
  const Eigen::Index r = grad.rows();
  Eigen::MatrixXcd M(static_cast<Eigen::Index>(n), r);
  for (Eigen::Index j = 0; j < M.rows(); ++j) {
    for (Eigen::Index i = 0; i < r; ++i) {
      M(j, i) = d[static_cast<std::size_t>(j)] * std::conj(grad(i, j));
    }
  }
  arc.cauchy_binet = cauchy_binet(rescaled_gradient(system, s.s));

  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = system.weights[j].get_d();
  auto arc_point = [&](const Point& y, double t) {
    Point p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = std::pow(t, w[j]) * y[j];
    return p;
  };
  auto deformed = [&](const Eigen::VectorXcd& z) {
    Eigen::VectorXcd h = M * z;
    Point y = s.s;
    for (std::size_t j = 0; j < n; ++j) y[j] += epsilon * h(static_cast<Eigen::Index>(j));
    return std::make_pair(y, std::abs(epsilon) * h.norm());
  };

  const double cap = std::min(options.max_deformation,
                              options.relative_deformation * s.distance_to_sigma);
  ScaledSystem F(system, epsilon);
  Eigen::VectorXcd z = Eigen::VectorXcd::Zero(r);
  bool failed = false;
  for (double t : t_grid) {
    F.set_t(t);
    std::vector<double> hist;
    int its = 0;
    bool ok = false;
    double res = std::numeric_limits<double>::infinity();
    if (!failed) {
      auto [y, size] = deformed(z);
      Eigen::VectorXcd v = F.value(y);
      res = max_abs(v);
      if (options.record_history) hist.push_back(res);
      if (epsilon == Complex(0)) {
        ok = true;
      } else {
        for (; its <= options.max_iterations; ++its) {
          if (res <= options.tolerance) {
            ok = true;
            break;
          }
          if (its == options.max_iterations) break;
          Eigen::MatrixXcd dF = epsilon * F.jacobian(y) * M;
          Eigen::VectorXcd step = dF.fullPivLu().solve(-v);
          if (!step.allFinite()) break;
          double lambda = 1;
          bool accepted = false;
          for (int halving = 0; halving < 12; ++halving, lambda *= 0.5) {
            Eigen::VectorXcd zt = z + lambda * step;
            auto [yt, st] = deformed(zt);
            Eigen::VectorXcd vt = F.value(yt);
            if (max_abs(vt) < res) {
              z = zt;
              y = yt;
              size = st;
              v = vt;
              res = max_abs(vt);
              accepted = true;
              break;
            }
          }
          if (options.record_history) hist.push_back(res);
          if (!accepted) break;
          if (size > cap) break;
        }
        if (size > cap) {
          ok = false;
          arc.failure = "deformation " + std::to_string(size) + " exceeds cap " +
                        std::to_string(cap) + " at t = " + std::to_string(t);
        } else if (!ok) {
          arc.failure = "Newton did not converge at t = " + std::to_string(t);
        }
      }
      failed = !ok;
      arc.points.push_back(arc_point(y, t));
    } else {
      arc.points.push_back(Point(n, Complex(std::nan(""), std::nan(""))));
    }
    arc.z_values.push_back(z);
    arc.residuals.push_back(res);
    arc.converged.push_back(ok);
    arc.iterations.push_back(its);
    if (options.record_history) arc.history.push_back(std::move(hist));
  }
  return arc;
}

TangencyEstimate tangency_exponent(const std::vector<double>& t, const std::vector<Point>& a,
                                   const std::vector<Point>& b, std::size_t window,
                                   std::size_t min_points) {
  if (a.size() != t.size() || b.size() != t.size()) {
    throw ValidationError("tangency: arcs and grid differ in length");
  }
  std::vector<std::size_t> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return t[i] < t[j]; });
  if (order.size() < min_points) {
    throw ValidationError("tangency: need at least " + std::to_string(min_points) + " points, got " +
                          std::to_string(order.size()));
  }
  order.resize(std::min(order.size(), std::max(window, min_points)));

  TangencyEstimate est;
  est.t_min = t[order.front()];
  est.t_max = t[order.back()];
  std::vector<double> xs, ys;
  bool identical = true;
  for (auto k : order) {
    double dist = distance(a[k], b[k]);
    if (dist > 0) identical = false;
    double r = norm(a[k]);
    if (dist > 0 && r > 0) {
      xs.push_back(std::log(r));
      ys.push_back(std::log(dist));
    }
  }
  est.points = order.size();
  if (identical) {
    est.alpha = std::numeric_limits<double>::infinity();
    est.r2 = 1;
    return est;
  }
  if (xs.size() < 2) throw ValidationError("tangency: too few separated points");
  const double m = static_cast<double>(xs.size());
  double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / m;
  double my = std::accumulate(ys.begin(), ys.end(), 0.0) / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
    syy += (ys[k] - my) * (ys[k] - my);
  }
  if (sxx == 0) throw ValidationError("tangency: degenerate abscissae");
  est.alpha = sxy / sxx;
  est.r2 = syy == 0 ? 1 : (sxy * sxy) / (sxx * syy);
  return est;
}

TangencyEstimate tangency_exponent(const ArcSample& a, const ArcSample& b, std::size_t window) {
  if (a.t_grid != b.t_grid) throw ValidationError("tangency: arcs use different grids");
  std::vector<double> t;
  std::vector<Point> pa, pb;
  for (std::size_t k = 0; k < a.t_grid.size(); ++k) {
    if (!a.converged[k] || !b.converged[k]) continue;
    t.push_back(a.t_grid[k]);
    pa.push_back(a.points[k]);
    pb.push_back(b.points[k]);
  }
  return tangency_exponent(t, pa, pb, window);
}

FoliationReport verify_foliation(const GermSystem& system, std::complex<double> epsilon,
                                 const std::vector<LinkSample>& samples,
                                 const FoliationOptions& options) {
  if (samples.size() < 2) throw ValidationError("verify_foliation needs at least two samples");
  FoliationReport rep;
  rep.epsilon = epsilon;
  rep.delta = delta(system);
  const double wN = system.weights[system.ambient_dim() - 1].get_d();
  rep.exponent_threshold = 1 + (rep.delta ? rep.delta->get_d() / wN : 0.0);

  for (const auto& s : samples) {
    rep.arcs.push_back(deform_arc(system, epsilon, s, options.t_grid, options.arc));
    rep.unperturbed.push_back(deform_arc(system, 0.0, s, options.t_grid, options.arc));
  }
  for (const auto& a : rep.arcs) rep.converged_arcs += a.all_converged() ? 1 : 0;
  const std::size_t m = samples.size();
  auto label = [](std::size_t i) { return "#" + std::to_string(i); };

  PropertyCheck bound{"tord-bound", true, 0, {}};
  for (std::size_t i = 0; i < m; ++i) {
    TangencyEstimate est;
    bool ok = true;
    try {
      est = tangency_exponent(rep.unperturbed[i], rep.arcs[i]);
    } catch (const ValidationError&) {
      ok = false;
    }
    rep.deformation_tangency.push_back(est);
    if (!ok) continue;
    ++bound.tested;
    if (est.alpha < rep.exponent_threshold - options.fit_tolerance) {
      bound.passed = false;
      bound.offenders.push_back(label(i) + " alpha = " + std::to_string(est.alpha));
    }
  }

  PropertyCheck dichotomy{"tangency-dichotomy", true, 0, {}};
  std::mt19937_64 rng(splitmix64(options.seed ^ 0xd1c0ULL));
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (std::size_t p = 0; p < options.pairs; ++p) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) j = (j + 1) % m;
    TangencyEstimate a0, ae;
    try {
      a0 = tangency_exponent(rep.unperturbed[i], rep.unperturbed[j]);
      ae = tangency_exponent(rep.arcs[i], rep.arcs[j]);
    } catch (const ValidationError&) {
      continue;
    }
    const double margin = options.tangency_margin;
    bool applies = true, ok = true;
    if (std::abs(a0.alpha - 1) <= margin) {
      ok = std::abs(ae.alpha - 1) <= margin;
    } else if (a0.alpha > 1 + margin) {
      ok = ae.alpha > 1 + margin;
    } else {
      applies = false;
    }
    if (!applies) continue;
    ++dichotomy.tested;
    if (!ok) {
      dichotomy.passed = false;
      dichotomy.offenders.push_back("(" + label(i) + ", " + label(j) + ") alpha_0 = " +
                                    std::to_string(a0.alpha) + ", alpha_eps = " +
                                    std::to_string(ae.alpha));
    }
  }

  PropertyCheck separation{"separation", true, 0, {}};
  const std::size_t last = options.t_grid.size() - 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (samples[i].s == samples[j].s) continue;
      const auto& a = rep.arcs[i];
      const auto& b = rep.arcs[j];
      if (!a.converged[last] || !b.converged[last]) continue;
      ++separation.tested;
      double scale = std::max(norm(a.points[last]), norm(b.points[last]));
      if (distance(a.points[last], b.points[last]) <= options.separation * scale) {
        separation.passed = false;
        separation.offenders.push_back("(" + label(i) + ", " + label(j) + ")");
      }
    }
  }

  PropertyCheck planes{"coordinate-planes", true, 0, {}};
  auto split = weight_splitting(system.weights);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& arc = rep.arcs[i];
    for (auto r : split.breakpoints) {
      if (r >= system.ambient_dim()) continue;
      bool inside = std::all_of(arc.s.s.begin(), arc.s.s.begin() + static_cast<long>(r),
                                [](Complex v) { return v == Complex(0); });
      if (!inside) continue;
      ++planes.tested;
      for (std::size_t k = 0; k < arc.points.size(); ++k) {
        if (!arc.converged[k]) continue;
        for (std::size_t j = 0; j < r; ++j) {
          if (arc.points[k][j] != Complex(0)) {
            planes.passed = false;
            planes.offenders.push_back(label(i) + " leaves V(x_1..x_" + std::to_string(r) + ")");
            k = arc.points.size();
            break;
          }
        }
      }
    }
  }

  rep.checks = {bound, dichotomy, separation, planes};
  rep.passed = rep.converged_arcs > 0 &&
               std::all_of(rep.checks.begin(), rep.checks.end(), [](const auto& c) { return c.passed; });
  return rep;
}

void write_arc_csv(std::ostream& out, const GermSystem& system, const std::vector<ArcSample>& arcs) {
  const auto& vars = system.variables;
  out << "seed";
  for (const auto& v : vars) out << ",s_" << v << "_re,s_" << v << "_im";
  out << ",eps_re,eps_im,t";
  for (const auto& v : vars) out << "," << v << "_re," << v << "_im";
  out << ",residual,converged\n";
  out << std::setprecision(17);
  for (const auto& arc : arcs) {
    for (std::size_t k = 0; k < arc.t_grid.size(); ++k) {
      out << arc.s.seed;
      for (const auto& c : arc.s.s) out << ',' << c.real() << ',' << c.imag();
      out << ',' << arc.epsilon.real() << ',' << arc.epsilon.imag() << ',' << arc.t_grid[k];
      for (const auto& c : arc.points[k]) out << ',' << c.real() << ',' << c.imag();
      out << ',' << arc.residuals[k] << ',' << (arc.converged[k] ? 1 : 0) << '\n';
    }
  }
}

}  // namespace germlab
