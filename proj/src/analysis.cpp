#include "germlab/analysis.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "germlab/error.hpp"
#include "germlab/numeric.hpp"

namespace germlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::FastCycleFound:
      return "FAST_CYCLE_FOUND";
    case Verdict::NoObstructionFound:
      return "NO_OBSTRUCTION_FOUND";
    case Verdict::HypothesesUnverified:
      return "HYPOTHESES_UNVERIFIED";
  }
  return "UNKNOWN";
}

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Verified:
      return "verified";
    case HypothesisStatus::Failed:
      return "failed";
    case HypothesisStatus::UserAsserted:
      return "user-asserted";
    case HypothesisStatus::Unchecked:
      return "unchecked";
  }
  return "unknown";
}

namespace {

constexpr double kFibreSlice = 1.0 / 20.0;
constexpr int kFibreStarts = 16;
constexpr double kRankTolerance = 1e-6;

std::vector<Polynomial> slice_x1(const std::vector<Polynomial>& system,
                                 const std::optional<GaussianRational>& value) {
  std::vector<Polynomial> out;
  for (const auto& f : system) {
    out.push_back(value ? f.substitute(0, *value).restrict_to_hyperplane(0)
                        : f.restrict_to_hyperplane(0));
  }
  return out;
}

HypothesisStatus status_of(const std::optional<bool>& v) {
  if (!v) return HypothesisStatus::Unchecked;
  return *v ? HypothesisStatus::Verified : HypothesisStatus::Failed;
}

// Samples points of X & V(x_1 - t_0) and checks that the Jacobian has full
// row rank at each of them.
bool smooth_fibre_check(const std::vector<Polynomial>& full, std::uint64_t seed,
                        std::string& evidence) {
  auto fibre = slice_x1(full, GaussianRational(Rational(1, 20)));
  NumericSystem ns(fibre);
  std::mt19937_64 rng(seed ^ 0x5eedf1b7eULL);
  std::normal_distribution<double> gauss;
  int found = 0;
  double worst = 1;
  for (int start = 0; start < kFibreStarts; ++start) {
    Point x(ns.variables());
    for (auto& v : x) v = {0.5 * gauss(rng), 0.5 * gauss(rng)};
    auto sol = solve_holomorphic(ns, x, 1e-12, 200);
    if (!sol.converged) continue;
    ++found;
    worst = std::min(worst, jacobian_rank_ratio(ns, sol.x));
  }
  evidence = std::to_string(found) + " points sampled on X & V(x_1 - " + std::to_string(kFibreSlice) +
             "), smallest normalized Jacobian singular value " + std::to_string(worst);
  return found > 0 && worst > kRankTolerance;
}

std::vector<Rational> slice_values(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x7031ce5ULL);
  std::uniform_int_distribution<int> num(1, 3), den(5, 50);
  std::vector<Rational> out;
  while (out.size() < 3) {
    Rational t(num(rng), den(rng));
    t.canonicalize();
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

std::string homotopy_text(std::optional<std::size_t> mu, int sphere_dim) {
  const std::string sphere = "S^" + std::to_string(sphere_dim);
  if (!mu) return "Milnor fibre of X & V(x_1)";
  if (*mu == 1) return sphere;
  return "wedge of " + std::to_string(*mu) + " copies of " + sphere;
}

}  // namespace

AnalysisReport analyze(const GermSystem& input, const AnalysisOptions& options) {
  AnalysisReport rep;
  auto& ledger = rep.ledger;
  const auto& gopt = options.groebner;

  GermSystem sys = input;
  {
    Hypothesis h{"dimension", "dim X = n >= 2", HypothesisStatus::Verified,
                 "n = " + std::to_string(input.n) + ", c = " + std::to_string(input.c)};
    if (input.n < 2) h.status = HypothesisStatus::Failed;
    ledger.push_back(h);
  }
  {
    Hypothesis h{"higher-order", "perturbation has strictly higher weighted order",
                 HypothesisStatus::Verified, ""};
    if (input.is_unperturbed()) {
      h.evidence = "no perturbation";
    } else if (input.has_same_order_terms()) {
      try {
        sys = absorb_same_order(input);
        h.evidence = "same-order terms folded into the principal part";
      } catch (const ValidationError& e) {
        h.status = HypothesisStatus::Failed;
        h.evidence = e.what();
      }
    } else {
      h.evidence = "ord f_{>p} > p for every equation";
    }
    ledger.push_back(h);
  }
  {
    bool ok = sys.principal_in_m_squared();
    ledger.push_back({"m-squared", "(f_p) is contained in (x)^2",
                      ok ? HypothesisStatus::Verified : HypothesisStatus::Failed,
                      ok ? "no linear or constant terms in f_p" : "f_p has a linear term"});
  }

  const auto route = sys.is_unperturbed() ? DimensionRoute::Global : DimensionRoute::Local;
  const auto full = sys.full();
  const int n = sys.n;

  {
    auto ci = check_complete_intersection(full, route, gopt);
    ledger.push_back({"a", "X is reduced (complete intersection of dimension n)",
                      status_of(ci.reduced), ci.evidence});
  }

  CompleteIntersectionCheck slice_check;
  std::vector<Polynomial> slice;
  if (sys.ambient_dim() >= 2) {
    slice = slice_x1(full, std::nullopt);
    slice_check = check_complete_intersection(slice, route, gopt);
  } else {
    slice_check.evidence = "no variables left after cutting by x_1";
  }
  ledger.push_back({"b", "X & V(x_1) is a reduced complete intersection of dimension n-1",
                    status_of(slice_check.reduced), slice_check.evidence});

  {
    Hypothesis h{"c", "X & V(x_1 - t_0) is the (smooth) Milnor fibre of X & V(x_1)",
                 HypothesisStatus::Unchecked, ""};
    if (slice_check.icis == true && slice_check.reduced == true) {
      std::string ev;
      if (smooth_fibre_check(full, options.seed, ev)) {
        h.status = HypothesisStatus::Verified;
        h.evidence = "X & V(x_1) is an ICIS; " + ev;
      } else {
        h.evidence = "X & V(x_1) is an ICIS but the sampled fibre check failed: " + ev;
      }
    } else if (slice_check.icis == false) {
      h.evidence = "X & V(x_1) is not an ICIS (dim Sing = " +
                   std::to_string(slice_check.sing_dimension.value_or(-2)) +
                   "); no sufficient condition available";
    } else {
      h.evidence = "slice check incomplete";
    }
    if (h.status != HypothesisStatus::Verified && options.assumptions.milnor_fibre) {
      h.status = HypothesisStatus::UserAsserted;
      h.evidence += "; asserted by the user (assume-milnor-fibre)";
    }
    ledger.push_back(h);
  }

  {
    Hypothesis h{"d", "X = X_0, or dim[X & Sing(X_0) & V(x_1 - t_0)] < (n-1)/2",
                 HypothesisStatus::Unchecked, ""};
    if (sys.is_unperturbed()) {
      h.status = HypothesisStatus::Verified;
      h.evidence = "perturbation trivial";
    } else {
      rep.slice_values = slice_values(options.seed);
      std::vector<int> dims;
      try {
        auto sing0 = singular_locus_ideal(sys.principal);
        for (const auto& t0 : rep.slice_values) {
          std::vector<Polynomial> gens = full;
          gens.insert(gens.end(), sing0.begin(), sing0.end());
          gens.push_back(Polynomial::variable(sys.variables, 0) -
                         Polynomial::constant(sys.variables, GaussianRational(t0)));
          dims.push_back(ideal_dimension(gens, DimensionRoute::Global, gopt));
        }
        std::string list;
        for (std::size_t k = 0; k < dims.size(); ++k) {
          list += (k ? ", " : "") + std::string("t_0 = ") + rep.slice_values[k].get_str() +
                  ": dim " + std::to_string(dims[k]);
        }
        bool agree = std::all_of(dims.begin(), dims.end(), [&](int d) { return d == dims[0]; });
        if (!agree) {
          h.evidence = "random slices disagree (" + list + ")";
        } else {
          h.status = 2 * dims[0] < n - 1 ? HypothesisStatus::Verified : HypothesisStatus::Failed;
          h.evidence = list + " [global dimension, random rational slices]";
        }
      } catch (const BudgetExhausted& e) {
        h.evidence = e.what();
      }
    }
    ledger.push_back(h);
  }

  if (slice_check.sing_dimension) {
    const int l = n - *slice_check.sing_dimension;
    rep.l = l;
    if (l >= 1 && l <= static_cast<int>(sys.ambient_dim())) {
      const auto& w1 = sys.weights[0];
      const auto& wl = sys.weights[static_cast<std::size_t>(l - 1)];
      rep.criterion = "l = " + std::to_string(l) + ": w_1 = " + w1.get_str() +
                      (w1 < wl ? " < " : " = ") + "w_l = " + wl.get_str();
    }
  }

  const bool standing = std::all_of(ledger.begin(), ledger.begin() + 4,
                                    [](const Hypothesis& h) { return h.holds(); });
  const bool all_hold =
      std::all_of(ledger.begin(), ledger.end(), [](const Hypothesis& h) { return h.holds(); });

  auto make_certificate = [&](int l, const std::string& route_name) {
    Certificate cert;
    cert.l = l;
    cert.dimension_lower_bound = l - 1;
    cert.route = route_name;
    if (sys.c == 1 && slice_check.icis == true) {
      try {
        cert.milnor_number = milnor_number_hypersurface(slice.front(), gopt);
      } catch (const BudgetExhausted& e) {
        cert.milnor_note = std::string("Milnor number not computed: ") + e.what();
      }
    } else if (sys.c >= 2) {
      cert.milnor_note = "mu unavailable for complete intersections; fast-cycle existence still certified";
    }
    cert.homotopy = homotopy_text(cert.milnor_number, n - 1);
    if (!cert.milnor_number && slice_check.icis == true) {
      cert.homotopy = "bouquet of S^" + std::to_string(n - 1) + " (Milnor fibre of the ICIS X & V(x_1))";
    }
    cert.tangent_cone_dim_bound = weight_splitting(sys.weights).breakpoints.front();
    cert.exponent = exponent_bound(sys);
    return cert;
  };

  if (all_hold && rep.l) {
    const int l = *rep.l;
    if (l < 2 || l > n) {
      ledger.push_back({"e", "2 <= l <= n", HypothesisStatus::Failed,
                        "l = " + std::to_string(l) + " out of range"});
      rep.verdict = Verdict::HypothesesUnverified;
      rep.summary = "internal consistency check on l failed";
      return rep;
    }
    ledger.push_back({"e", "2 <= l <= n", HypothesisStatus::Verified, "l = " + std::to_string(l)});
    if (sys.weights[0] < sys.weights[static_cast<std::size_t>(l - 1)]) {
      rep.verdict = Verdict::FastCycleFound;
      rep.certificate = make_certificate(l, "milnor-fibre-slice");
      rep.summary = "fast cycle of real dimension >= " + std::to_string(l - 1) +
                    "; the germ is not inner metrically conical";
    } else {
      rep.verdict = Verdict::NoObstructionFound;
      rep.summary = "w_1 = w_l: the weight criterion is silent (this does not certify IMC)";
    }
    return rep;
  }

  if (n == 2 && standing && options.assumptions.noncontractible_component) {
    ledger.push_back({"surface", "X & V(x_1 - t_0) contains a smooth irreducible non-contractible component",
                      HypothesisStatus::UserAsserted,
                      "asserted by the user (assume-noncontractible-component)"});
    if (sys.weights[0] < sys.weights[1]) {
      rep.verdict = Verdict::FastCycleFound;
      Certificate cert = make_certificate(2, "surface-noncontractible-component");
      cert.homotopy = "S^1 (fast loop)";
      rep.certificate = cert;
      rep.summary = "fast loop (surface case, user assertion); the germ is not inner metrically conical";
    } else {
      rep.verdict = Verdict::NoObstructionFound;
      rep.summary = "w_1 = w_2: the surface criterion is silent (this does not certify IMC)";
    }
    return rep;
  }

  rep.verdict = Verdict::HypothesesUnverified;
  std::string missing;
  for (const auto& h : ledger) {
    if (!h.holds()) missing += (missing.empty() ? "" : ", ") + h.id;
  }
  rep.summary = "hypotheses not established: " + (missing.empty() ? std::string("l") : missing);
  return rep;
}

NewtonAnalysis analyze_newton(const Polynomial& f, const NewtonOptions& options) {
  NewtonAnalysis out;
  out.diagram = newton_diagram(f);
  if (!out.diagram.convenient) {
    throw ValidationError("f is not convenient: its Newton diagram misses a coordinate axis");
  }
  NondegeneracyOptions nd;
  nd.groebner = options.analysis.groebner;
  nd.probabilistic_fallback = options.probabilistic_nnd;
  nd.seed = options.analysis.seed;
  out.nondegeneracy = is_newton_nondegenerate(f, out.diagram, nd);
  out.weights = face_weight_report(out.diagram);

  const int n = static_cast<int>(f.arity()) - 1;
  const auto& faces = out.diagram.faces;

  if (out.weights.size() == 1) {
    const auto& summary = out.weights.front();
    const Face& face = faces[summary.face_index];
    Polynomial fs = face_restriction(f, face);
    auto system = make_germ_system(f.variables(), {fs}, {f - fs}, face.weights);
    auto report = analyze(system, options.analysis);
    FaceVerdict fv;
    fv.face_index = summary.face_index;
    fv.verdict = report.verdict;
    fv.lower_weights_coincide = summary.sorted_weights.front() ==
                                summary.sorted_weights[static_cast<std::size_t>(std::max(n, 1) - 1)];
    fv.evidence = "single top face: germ analysed as a perturbation of f_sigma; " + report.summary;
    out.faces.push_back(fv);
    out.verdict = report.verdict;
    out.note = "single top face: the several-faces criterion is not applicable; "
               "the weighted-homogeneous criterion was applied to f_sigma + (f - f_sigma)";
    out.single_face = std::move(report);
    out.single_face_system = std::move(system);
    return out;
  }

  const bool nondegenerate = out.nondegeneracy.overall == true;
  bool any_fast = false, any_unverified = false;
  for (const auto& summary : out.weights) {
    FaceVerdict fv;
    fv.face_index = summary.face_index;
    const std::size_t low = static_cast<std::size_t>(std::max(n, 1));
    fv.lower_weights_coincide = summary.sorted_weights.front() == summary.sorted_weights[low - 1];
    if (!nondegenerate) {
      fv.verdict = Verdict::HypothesesUnverified;
      fv.evidence = out.nondegeneracy.overall == false ? "f is Newton-degenerate"
                                                       : "Newton non-degeneracy undetermined";
    } else {
      Polynomial fs = face_restriction(f, faces[summary.face_index]);
      try {
        fv.sing_dimension =
            ideal_dimension(singular_locus_ideal({fs}), DimensionRoute::Global, options.analysis.groebner);
        fv.sing_condition = n == 2 || 2 * *fv.sing_dimension < n + 3;
        if (!fv.sing_condition) {
          fv.verdict = Verdict::NoObstructionFound;
          fv.evidence = "dim Sing V(f_sigma) = " + std::to_string(*fv.sing_dimension) +
                        " is not below (n+3)/2; criterion silent";
        } else if (!fv.lower_weights_coincide) {
          fv.verdict = Verdict::FastCycleFound;
          fv.evidence = "lowest " + std::to_string(low) + " weights differ (" +
                        summary.sorted_weights.front().get_str() + " vs " +
                        summary.sorted_weights[low - 1].get_str() + ")";
        } else {
          fv.verdict = Verdict::NoObstructionFound;
          fv.evidence = "lowest " + std::to_string(low) + " weights coincide";
        }
      } catch (const BudgetExhausted& e) {
        fv.verdict = Verdict::HypothesesUnverified;
        fv.evidence = e.what();
      }
    }
    any_fast = any_fast || fv.verdict == Verdict::FastCycleFound;
    any_unverified = any_unverified || fv.verdict == Verdict::HypothesesUnverified;
    out.faces.push_back(std::move(fv));
  }
  out.verdict = any_fast         ? Verdict::FastCycleFound
                : any_unverified ? Verdict::HypothesesUnverified
                                 : Verdict::NoObstructionFound;
  if (out.nondegeneracy.probabilistic) out.note = "non-degeneracy established probabilistically";
  return out;
}

}  // namespace germlab
