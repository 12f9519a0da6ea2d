#include "germlab/newton.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "germlab/error.hpp"

namespace germlab {

namespace {

using Point = std::vector<long long>;
using Mask = std::vector<bool>;

long long checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error("Newton diagram: integer overflow");
  return static_cast<long long>(v);
}

// Fraction-free (Bareiss) determinant.
long long determinant(std::vector<std::vector<long long>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(a[i][j]) * a[k][k] -
                     static_cast<__int128>(a[i][k]) * a[k][j];
        a[i][j] = checked(v / prev);
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Generalized cross product of N-1 rows in Z^N.
Point normal_of(const std::vector<Point>& rows, std::size_t n) {
  Point nu(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> minor;
    for (const auto& r : rows) {
      std::vector<long long> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(r[c]);
      }
      minor.push_back(std::move(row));
    }
    long long d = determinant(std::move(minor));
    nu[j] = (j % 2 == 0) ? d : -d;
  }
  return nu;
}

bool make_primitive_nonnegative(Point& nu) {
  bool pos = false, neg = false;
  for (auto v : nu) {
    pos = pos || v > 0;
    neg = neg || v < 0;
  }
  if (pos == neg) return false;  // zero vector or mixed signs
  long long g = 0;
  for (auto& v : nu) {
    if (neg) v = -v;
    g = std::gcd(g, v);
  }
  for (auto& v : nu) v /= g;
  return true;
}

long long dot(const Point& a, const Point& b) {
  __int128 s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<__int128>(a[k]) * b[k];
  return checked(s);
}

// Affine rank of a point set.
int affine_dimension(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  const std::size_t n = pts.front().size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(pts.size() - 1), static_cast<Eigen::Index>(n));
  for (std::size_t r = 1; r < pts.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(static_cast<Eigen::Index>(r - 1), static_cast<Eigen::Index>(c)) =
          static_cast<double>(pts[r][c] - pts[0][c]);
    }
  }
  if (m.rows() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  return static_cast<int>(lu.rank());
}

struct Facet {
  Point normal;
  long long level;
  Mask on;
};

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

constexpr double kCombinationCap = 2e7;

}  // namespace

std::vector<const Face*> NewtonDiagram::top_faces() const {
  std::vector<const Face*> out;
  for (const auto& f : faces) {
    if (f.dim == static_cast<int>(ambient_dim) - 1) out.push_back(&f);
  }
  return out;
}

NewtonDiagram newton_diagram(const Polynomial& f) {
  if (f.is_zero()) throw ValidationError("Newton diagram of the zero polynomial");
  if (!f.constant_term().is_zero()) {
    throw ValidationError("Newton diagram: f does not vanish at the origin");
  }
  const std::size_t n = f.arity();
  NewtonDiagram diagram;
  diagram.ambient_dim = n;
  for (const auto& [m, c] : f.terms()) diagram.support.push_back(m);

  // Dominated points never lie on a compact face.
  std::vector<Point> pts;
  std::vector<Monomial> minimal;
  for (const auto& a : diagram.support) {
    bool dominated = std::any_of(diagram.support.begin(), diagram.support.end(),
                                 [&](const Monomial& b) { return b != a && b.divides(a); });
    if (dominated) continue;
    minimal.push_back(a);
    Point p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = a[k];
    pts.push_back(std::move(p));
  }

  diagram.convenient = true;
  for (std::size_t k = 0; k < n; ++k) {
    bool axis = std::any_of(minimal.begin(), minimal.end(), [&](const Monomial& m) {
      return m.support_mask() == (1u << k);
    });
    diagram.convenient = diagram.convenient && axis;
  }

  double work = 0;
  for (std::size_t z = 0; z < n; ++z) work += binomial(n, z) * binomial(pts.size(), n - z);
  if (work > kCombinationCap) {
    throw ValidationError("Newton diagram too large for brute-force facet enumeration (" +
                          std::to_string(pts.size()) + " minimal support points in dimension " +
                          std::to_string(n) + ")");
  }

  std::map<Point, Facet> facets;
  auto try_normal = [&](Point nu) {
    if (!make_primitive_nonnegative(nu)) return;
    if (facets.count(nu)) return;
    long long level = dot(nu, pts.front());
    for (const auto& p : pts) level = std::min(level, dot(nu, p));
    Facet facet{nu, level, Mask(pts.size(), false)};
    std::vector<Point> on;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (dot(nu, pts[k]) == level) {
        facet.on[k] = true;
        on.push_back(pts[k]);
      }
    }
    // The face spanned by `on` and the recession directions with zero normal
    // entry must be a hyperplane piece; a lower-dimensional face is not a facet.
    std::vector<Point> span = on;
    int zeros = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (nu[k] == 0) {
        ++zeros;
        Point e = on.front();
        e[k] += 1;
        span.push_back(std::move(e));
      }
    }
    if (affine_dimension(span) != static_cast<int>(n) - 1 || zeros == static_cast<int>(n)) return;
    facets.emplace(nu, std::move(facet));
  };

  for (std::uint32_t zmask = 0; zmask < (1u << n); ++zmask) {
    const std::size_t z = static_cast<std::size_t>(std::popcount(zmask));
    if (z >= n) continue;
    const std::size_t m = n - z;
    for_each_combination(pts.size(), m, [&](const std::vector<std::size_t>& idx) {
      std::vector<Point> rows;
      for (std::size_t k = 1; k < m; ++k) {
        Point d(n);
        for (std::size_t c = 0; c < n; ++c) d[c] = pts[idx[k]][c] - pts[idx[0]][c];
        rows.push_back(std::move(d));
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (zmask & (1u << c)) {
          Point e(n, 0);
          e[c] = 1;
          rows.push_back(std::move(e));
        }
      }
      try_normal(normal_of(rows, n));
    });
  }

  std::vector<const Facet*> facet_list;
  for (const auto& [nu, facet] : facets) facet_list.push_back(&facet);

  // Point sets of faces: closure of facet point sets under intersection.
  std::set<Mask> seen;
  std::vector<Mask> queue;
  for (const auto* facet : facet_list) {
    if (seen.insert(facet->on).second) queue.push_back(facet->on);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto* facet : facet_list) {
      Mask meet(pts.size(), false);
      bool any = false;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        meet[k] = queue[head][k] && facet->on[k];
        any = any || meet[k];
      }
      if (any && seen.insert(meet).second) queue.push_back(meet);
    }
  }

  std::set<std::size_t> vertex_points;
  std::vector<std::pair<Mask, Point>> compact;
  for (const auto& mask : queue) {
    Point sum(n, 0);
    for (const auto* facet : facet_list) {
      bool contains = true;
      for (std::size_t k = 0; k < pts.size() && contains; ++k) {
        contains = !mask[k] || facet->on[k];
      }
      if (!contains) continue;
      for (std::size_t c = 0; c < n; ++c) sum[c] += facet->normal[c];
    }
    if (std::any_of(sum.begin(), sum.end(), [](long long v) { return v <= 0; })) continue;
    make_primitive_nonnegative(sum);
    if (std::count(mask.begin(), mask.end(), true) == 1) {
      vertex_points.insert(static_cast<std::size_t>(
          std::find(mask.begin(), mask.end(), true) - mask.begin()));
    }
    compact.emplace_back(mask, std::move(sum));
  }

  for (const auto& [mask, nu] : compact) {
    Face face;
    std::vector<Point> on;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (!mask[k]) continue;
      on.push_back(pts[k]);
      face.points.push_back(minimal[k]);
      if (vertex_points.count(k)) face.vertices.push_back(minimal[k]);
    }
    face.dim = affine_dimension(on);
    face.inner_normal.assign(nu.begin(), nu.end());
    face.level = dot(nu, on.front());
    std::vector<Rational> w;
    for (auto v : nu) w.emplace_back(Rational(static_cast<long>(v), static_cast<long>(face.level)));
    for (auto& q : w) q.canonicalize();
    face.weights = WeightVector(std::move(w));
    diagram.faces.push_back(std::move(face));
  }
  std::sort(diagram.faces.begin(), diagram.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    if (a.inner_normal != b.inner_normal) return a.inner_normal < b.inner_normal;
    return a.points < b.points;
  });
  return diagram;
}

Polynomial face_restriction(const Polynomial& f, const Face& face) {
  if (face.inner_normal.size() != f.arity()) {
    throw ValidationError("face_restriction: face and polynomial have different arity");
  }
  Polynomial out(f.variables());
  std::vector<Monomial> found;
  for (const auto& [m, c] : f.terms()) {
    long long v = 0;
    for (std::size_t k = 0; k < f.arity(); ++k) v += face.inner_normal[k] * m[k];
    if (v < face.level) {
      throw ValidationError("face_restriction: support point below the face hyperplane");
    }
    if (v == face.level) {
      out.add_term(m, c);
      found.push_back(m);
    }
  }
  std::vector<Monomial> expected = face.points;
  std::sort(expected.begin(), expected.end());
  std::sort(found.begin(), found.end());
  if (found != expected) {
    throw ValidationError("face_restriction: face does not belong to this polynomial");
  }
  return out;
}

namespace {

// Moves x along the weighted C*-orbit to the unit sphere.
void weighted_normalize(std::vector<std::complex<double>>& x, const std::vector<double>& w) {
  auto norm_at = [&](double lam) {
    double s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) s += std::pow(lam, 2 * w[k]) * std::norm(x[k]);
    return s;
  };
  if (norm_at(1.0) == 0) return;
  double lo = 1e-12, hi = 1e12;
  for (int it = 0; it < 200; ++it) {
    double mid = std::sqrt(lo * hi);
    (norm_at(mid) > 1.0 ? hi : lo) = mid;
  }
  double lam = std::sqrt(lo * hi);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] *= std::pow(lam, w[k]);
}

}  // namespace

bool probabilistic_face_check(const Polynomial& f_sigma, std::uint64_t seed, int starts,
                              std::string* evidence) {
  const std::size_t n = f_sigma.arity();
  std::vector<Polynomial> grad;
  for (std::size_t k = 0; k < n; ++k) grad.push_back(f_sigma.derivative(k));
  std::vector<std::vector<Polynomial>> hess(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) hess[i].push_back(grad[i].derivative(j));
  }
  std::vector<double> w(n, 1.0);
  try {
    auto inferred = infer_weights(std::vector<Polynomial>{f_sigma});
    for (std::size_t k = 0; k < n; ++k) w[k] = to_double(inferred.weights[k]);
  } catch (const WeightInferenceError&) {
    // monomial faces leave weights free; plain normalization is enough there
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (int start = 0; start < starts; ++start) {
    std::vector<std::complex<double>> x(n);
    for (auto& v : x) v = {gauss(rng), gauss(rng)};
    weighted_normalize(x, w);
    double residual = 0;
    for (int it = 0; it < 60; ++it) {
      Eigen::VectorXcd g(static_cast<Eigen::Index>(n));
      Eigen::MatrixXcd H(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < n; ++i) {
        g(static_cast<Eigen::Index>(i)) = evaluate_numeric(grad[i], x);
        for (std::size_t j = 0; j < n; ++j) {
          H(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
              evaluate_numeric(hess[i][j], x);
        }
      }
      residual = g.norm();
      if (residual < 1e-12) break;
      Eigen::VectorXcd step = H.completeOrthogonalDecomposition().solve(-g);
      for (std::size_t k = 0; k < n; ++k) x[k] += step(static_cast<Eigen::Index>(k));
      weighted_normalize(x, w);
    }
    double smallest = INFINITY;
    for (const auto& v : x) smallest = std::min(smallest, std::abs(v));
    if (residual < 1e-9 && smallest > 1e-4) {
      if (evidence) {
        *evidence = "torus critical point found numerically (|grad| = " +
                    std::to_string(residual) + ", min |x_k| = " + std::to_string(smallest) + ")";
      }
      return false;
    }
  }
  if (evidence) {
    *evidence = "no torus critical point found from " + std::to_string(starts) +
                " random starts";
  }
  return true;
}

NondegeneracyReport is_newton_nondegenerate(const Polynomial& f, const NewtonDiagram& diagram,
                                            const NondegeneracyOptions& options) {
  if (!diagram.convenient) throw ValidationError("Newton non-degeneracy: f is not convenient");
  const std::size_t n = f.arity();
  NondegeneracyReport report;
  Polynomial torus = Polynomial::constant(f.variables(), 1);
  for (std::size_t k = 0; k < n; ++k) torus = torus * Polynomial::variable(f.variables(), k);

  bool all = true, undetermined = false;
  for (std::size_t idx = 0; idx < diagram.faces.size(); ++idx) {
    const auto& face = diagram.faces[idx];
    Polynomial fs = face_restriction(f, face);
    std::vector<Polynomial> partials;
    for (std::size_t k = 0; k < n; ++k) {
      auto d = fs.derivative(k);
      if (!d.is_zero()) partials.push_back(std::move(d));
    }
    FaceDegeneracy fd;
    try {
      auto sat = saturation(partials, torus, options.groebner);
      bool unit = sat.size() == 1 && sat.front().is_constant();
      fd.status = unit ? Degeneracy::Nondegenerate : Degeneracy::Degenerate;
      fd.evidence = unit ? "saturation by x_1...x_N is the unit ideal"
                         : "saturation by x_1...x_N is a proper ideal";
    } catch (const BudgetExhausted& e) {
      if (options.probabilistic_fallback) {
        std::string ev;
        bool ok = probabilistic_face_check(fs, options.seed + idx, options.probabilistic_starts, &ev);
        fd.status = ok ? Degeneracy::Nondegenerate : Degeneracy::Degenerate;
        fd.probabilistic = true;
        fd.evidence = std::string(e.what()) + "; " + ev;
        report.probabilistic = true;
      } else {
        fd.status = Degeneracy::Undetermined;
        fd.evidence = e.what();
      }
    }
    all = all && fd.status == Degeneracy::Nondegenerate;
    undetermined = undetermined || fd.status == Degeneracy::Undetermined;
    report.faces.push_back(std::move(fd));
  }
  if (!all && !undetermined) {
    report.overall = false;
  } else if (!undetermined) {
    report.overall = true;
  } else {
    bool some_degenerate = std::any_of(report.faces.begin(), report.faces.end(), [](const auto& fd) {
      return fd.status == Degeneracy::Degenerate;
    });
    if (some_degenerate) report.overall = false;
  }
  return report;
}

std::vector<FaceWeightSummary> face_weight_report(const NewtonDiagram& diagram) {
  std::vector<FaceWeightSummary> out;
  for (std::size_t idx = 0; idx < diagram.faces.size(); ++idx) {
    const auto& face = diagram.faces[idx];
    if (face.dim != static_cast<int>(diagram.ambient_dim) - 1) continue;
    FaceWeightSummary s;
    s.face_index = idx;
    s.sorted_variables.resize(face.weights.size());
    std::iota(s.sorted_variables.begin(), s.sorted_variables.end(), 0);
    std::stable_sort(s.sorted_variables.begin(), s.sorted_variables.end(),
                     [&](std::size_t a, std::size_t b) { return face.weights[a] < face.weights[b]; });
    for (auto k : s.sorted_variables) s.sorted_weights.push_back(face.weights[k]);
    s.lowest_multiplicity = static_cast<std::size_t>(
        std::count(s.sorted_weights.begin(), s.sorted_weights.end(), s.sorted_weights.front()));
    s.two_lowest_coincide = s.sorted_weights.size() >= 2 && s.sorted_weights[0] == s.sorted_weights[1];
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace germlab
