#include "germlab/germ.hpp"

#include <algorithm>
#include <numeric>

#include "germlab/error.hpp"
#include "germlab/parser.hpp"

namespace germlab {

std::string to_string(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::Zero:
      return "zero";
    case PerturbationKind::HigherOrder:
      return "higher-order";
    case PerturbationKind::SameOrder:
      return "same-order";
  }
  return "unknown";
}

std::vector<Polynomial> GermSystem::full() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < principal.size(); ++i) out.push_back(principal[i] + perturbation[i]);
  return out;
}

bool GermSystem::is_unperturbed() const {
  return std::all_of(perturbation.begin(), perturbation.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

bool GermSystem::has_same_order_terms() const {
  return std::find(perturbation_kinds.begin(), perturbation_kinds.end(),
                   PerturbationKind::SameOrder) != perturbation_kinds.end();
}

bool GermSystem::principal_in_m_squared() const {
  return std::all_of(principal.begin(), principal.end(), [](const Polynomial& f) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [](const auto& t) { return t.first.degree() >= 2; });
  });
}

GermSystem make_germ_system(const std::vector<std::string>& variables,
                            const std::vector<Polynomial>& principal,
                            const std::vector<Polynomial>& perturbation,
                            const std::optional<WeightVector>& weights) {
  validate_variable_names(variables);
  const std::size_t n_vars = variables.size();
  if (principal.empty()) throw ValidationError("germ system needs at least one equation");
  if (principal.size() > n_vars) {
    throw ValidationError("more equations than variables: not a complete intersection germ");
  }
  if (!perturbation.empty() && perturbation.size() != principal.size()) {
    throw ValidationError("principal and perturbation lists differ in length");
  }
  for (const auto& f : principal) {
    if (f.variables() != variables) throw ArityError("principal part over the wrong variables");
    if (f.is_zero()) throw ValidationError("zero principal part");
  }
  std::vector<Polynomial> pert = perturbation;
  if (pert.empty()) pert.assign(principal.size(), Polynomial(variables));
  for (const auto& f : pert) {
    if (f.variables() != variables) throw ArityError("perturbation over the wrong variables");
  }

  WeightVector w;
  if (weights) {
    if (weights->size() != n_vars) {
      throw ArityError("expected " + std::to_string(n_vars) + " weights, got " +
                       std::to_string(weights->size()));
    }
    w = *weights;
  } else {
    w = infer_weights(principal).weights;
  }

  std::vector<Rational> degrees;
  std::vector<PerturbationKind> kinds;
  for (std::size_t i = 0; i < principal.size(); ++i) {
    if (!is_weighted_homogeneous(principal[i], w)) {
      throw ValidationError("principal part " + std::to_string(i + 1) +
                            " is not weighted-homogeneous for the given weights");
    }
    Rational p = *weighted_order(principal[i], w);
    if (sgn(p) <= 0) {
      throw ValidationError("principal part " + std::to_string(i + 1) +
                            " is constant; the germ must pass through the origin");
    }
    degrees.push_back(p);
    auto ord = weighted_order(pert[i], w);
    if (!ord) {
      kinds.push_back(PerturbationKind::Zero);
    } else if (*ord < p) {
      throw ValidationError("perturbation " + std::to_string(i + 1) + " has weighted order " +
                            ord->get_str() + " below the principal degree " + p.get_str());
    } else {
      kinds.push_back(*ord == p ? PerturbationKind::SameOrder : PerturbationKind::HigherOrder);
    }
  }

  std::vector<std::size_t> order(n_vars);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });

  GermSystem s;
  s.original_variables = variables;
  s.original_index = order;
  for (auto k : order) s.variables.push_back(variables[k]);
  for (const auto& f : principal) s.principal.push_back(f.permuted(s.variables, order));
  for (const auto& f : pert) s.perturbation.push_back(f.permuted(s.variables, order));
  s.weights = w.permuted(order);
  s.degrees = std::move(degrees);
  s.perturbation_kinds = std::move(kinds);
  s.c = static_cast<int>(principal.size());
  s.n = static_cast<int>(n_vars) - s.c;
  return s;
}

GermSystem make_germ_system_from_equations(const std::vector<std::string>& variables,
                                           const std::vector<Polynomial>& equations,
                                           const std::optional<WeightVector>& weights) {
  if (!weights) return make_germ_system(variables, equations, {}, std::nullopt);
  std::vector<Polynomial> principal, rest;
  for (const auto& f : equations) {
    if (f.arity() != weights->size()) throw ArityError("weights and equations differ in arity");
    auto split = split_by_weight(f, *weights);
    principal.push_back(split.principal);
    rest.push_back(split.rest);
  }
  return make_germ_system(variables, principal, rest, weights);
}

GermSystem absorb_same_order(const GermSystem& system) {
  GermSystem out = system;
  for (std::size_t i = 0; i < system.principal.size(); ++i) {
    if (system.perturbation_kinds[i] != PerturbationKind::SameOrder) continue;
    Polynomial full = system.principal[i] + system.perturbation[i];
    Polynomial principal = weighted_part(full, system.weights, system.degrees[i]);
    if (principal.is_zero()) {
      throw ValidationError("same-order terms cancel principal part " + std::to_string(i + 1));
    }
    out.principal[i] = principal;
    out.perturbation[i] = full - principal;
    out.perturbation_kinds[i] =
        out.perturbation[i].is_zero() ? PerturbationKind::Zero : PerturbationKind::HigherOrder;
  }
  return out;
}

WeightSplitting weight_splitting(const WeightVector& weights) {
  if (!weights.is_sorted()) throw ValidationError("weight_splitting needs ascending weights");
  WeightSplitting out;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (k + 1 == weights.size() || weights[k + 1] != weights[k]) {
      out.breakpoints.push_back(k + 1);
      out.block_weights.push_back(weights[k]);
    }
  }
  return out;
}

std::vector<Polynomial> singular_locus_ideal(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw ValidationError("singular_locus_ideal: no generators");
  std::vector<Polynomial> out = generators;
  const std::size_t k = generators.size();
  const std::size_t n = generators.front().arity();
  if (k > n) return out;
  for (auto& m : minors(jacobian(generators), k)) {
    if (!m.is_zero()) out.push_back(std::move(m));
  }
  return out;
}

int ideal_dimension(const std::vector<Polynomial>& generators, DimensionRoute route,
                    const GroebnerOptions& options) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) {
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.empty()) return static_cast<int>(generators.front().arity());
  if (route == DimensionRoute::Local) return krull_dimension(local_standard_basis(gens, options));
  return krull_dimension(buchberger(gens, MonomialOrder::grevlex(), options));
}

CompleteIntersectionCheck check_complete_intersection(const std::vector<Polynomial>& generators,
                                                      DimensionRoute route,
                                                      const GroebnerOptions& options) {
  CompleteIntersectionCheck out;
  const int n = static_cast<int>(generators.front().arity());
  const int k = static_cast<int>(generators.size());
  const int expected = n - k;
  try {
    out.dimension = ideal_dimension(generators, route, options);
    out.sing_dimension = ideal_dimension(singular_locus_ideal(generators), route, options);
  } catch (const BudgetExhausted& e) {
    out.evidence = e.what();
    return out;
  }
  out.reduced = *out.dimension == expected && *out.sing_dimension < expected;
  out.icis = *out.sing_dimension <= 0;
  out.evidence = "dim = " + std::to_string(*out.dimension) + " (expected " +
                 std::to_string(expected) + "), dim Sing = " + std::to_string(*out.sing_dimension) +
                 (route == DimensionRoute::Local ? " [local standard basis]" : " [grevlex basis]");
  return out;
}

std::optional<bool> is_reduced_ci(const std::vector<Polynomial>& generators, DimensionRoute route,
                                  const GroebnerOptions& options) {
  return check_complete_intersection(generators, route, options).reduced;
}

std::optional<bool> is_icis(const std::vector<Polynomial>& generators, DimensionRoute route,
                            const GroebnerOptions& options) {
  return check_complete_intersection(generators, route, options).icis;
}

namespace {

std::string coordinate_label(const std::vector<std::string>& vars,
                             const std::vector<std::size_t>& idx) {
  std::string s = "V(";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + vars[idx[k]];
  return s + ")";
}

}  // namespace

ObstructionLocus sigma(const GermSystem& system, const GroebnerOptions& options) {
  const auto& vars = system.variables;
  const std::size_t n = vars.size();
  auto split = weight_splitting(system.weights);

  std::vector<std::size_t> cuts{0};
  for (auto r : split.breakpoints) {
    if (r < n) cuts.push_back(r);
  }

  ObstructionLocus locus;
  bool undetermined = false;
  int total = -1;
  for (auto r : cuts) {
    SigmaComponent comp;
    comp.cut = r;
    comp.generators = system.principal;
    for (std::size_t k = 0; k < r; ++k) comp.generators.push_back(Polynomial::variable(vars, k));
    if (r == 0) {
      comp.label = "Sing[X0]";
    } else {
      std::vector<std::size_t> idx(r);
      std::iota(idx.begin(), idx.end(), 0);
      comp.label = "Sing[X0 & " + coordinate_label(vars, idx) + "]";
    }
    try {
      auto ideal = singular_locus_ideal(comp.generators);
      auto gb = buchberger(ideal, MonomialOrder::grevlex(), options);
      comp.basis = gb.generators();
      comp.dimension = krull_dimension(gb);
      if (*comp.dimension >= 0) {
        for (std::size_t k = 0; k < n; ++k) {
          if (radical_membership(Polynomial::variable(vars, k), comp.basis, options)) {
            comp.vanishing_variables.push_back(k);
          }
        }
        if (static_cast<int>(n - comp.vanishing_variables.size()) == *comp.dimension) {
          comp.coordinate_subspace = coordinate_label(vars, comp.vanishing_variables);
        }
      }
      total = std::max(total, *comp.dimension);
    } catch (const BudgetExhausted&) {
      undetermined = true;
    }
    locus.components.push_back(std::move(comp));
  }
  if (!undetermined) {
    locus.total_dim = total;
    locus.is_origin_only = total <= 0;
  } else if (total > 0) {
    // one positive-dimensional component already settles the flag
    locus.is_origin_only = false;
  }
  return locus;
}

std::optional<Rational> delta(const GermSystem& system) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < system.perturbation.size(); ++i) {
    auto ord = weighted_order(system.perturbation[i], system.weights);
    if (!ord) continue;
    Rational d = *ord - system.degrees[i];
    if (!best || d < *best) best = d;
  }
  return best;
}

ExponentBound exponent_bound(const GermSystem& system) {
  auto split = weight_splitting(system.weights);
  const Rational& w1 = system.weights[0];
  const std::size_t r1 = split.breakpoints.front();
  auto d = delta(system);

  std::optional<Rational> first, second;
  if (d) first = Rational(1) + *d / w1;
  if (r1 < system.weights.size()) second = system.weights[r1] / w1;
  if (!first && !second) {
    throw ValidationError("exponent bound undefined: unperturbed system with a single weight block");
  }
  ExponentBound out;
  if (first && second) {
    out.value = std::min(*first, *second);
    out.formula = "min{1 + delta/w_1, w_{r_1+1}/w_1} = min{" + first->get_str() + ", " +
                  second->get_str() + "}";
  } else if (first) {
    out.value = *first;
    out.formula = "1 + delta/w_1 = " + first->get_str();
  } else {
    out.value = *second;
    out.formula = "w_{r_1+1}/w_1 = " + second->get_str() + " (delta infinite)";
  }
  out.nontrivial = out.value > 1;
  return out;
}

}  // namespace germlab
