#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "germlab/groebner.hpp"
#include "germlab/polynomial.hpp"
#include "germlab/weights.hpp"

namespace germlab {

enum class PerturbationKind { Zero, HigherOrder, SameOrder };

std::string to_string(PerturbationKind kind);

/// X_0 = V(f_p) and X = V(f_p + f_{>p}), with variables sorted by ascending
/// weight.
struct GermSystem {
  std::vector<std::string> variables;
  /// original_index[k] is the position of variables[k] in the input order.
  std::vector<std::size_t> original_index;
  std::vector<std::string> original_variables;
  std::vector<Polynomial> principal;
  std::vector<Polynomial> perturbation;
  WeightVector weights;
  std::vector<Rational> degrees;
  std::vector<PerturbationKind> perturbation_kinds;
  int n = 0;  // dim X = N - c
  int c = 0;  // number of equations

  std::size_t ambient_dim() const { return variables.size(); }
  std::vector<Polynomial> full() const;
  bool is_unperturbed() const;
  bool has_same_order_terms() const;
  /// (f_p) is contained in the square of the maximal ideal.
  bool principal_in_m_squared() const;
};

/// Validates and normalizes. When `weights` is empty they are inferred from
/// the principal parts. Throws ValidationError / ArityError /
/// WeightInferenceError.
GermSystem make_germ_system(const std::vector<std::string>& variables,
                            const std::vector<Polynomial>& principal,
                            const std::vector<Polynomial>& perturbation,
                            const std::optional<WeightVector>& weights = std::nullopt);

/// Splits each equation by weight; infers weights from the equations when none
/// are given (then the equations must be weighted-homogeneous).
GermSystem make_germ_system_from_equations(const std::vector<std::string>& variables,
                                           const std::vector<Polynomial>& equations,
                                           const std::optional<WeightVector>& weights =
                                               std::nullopt);

/// Same-order terms folded into the principal part: the system whose principal
/// parts are the lowest weighted parts of the full equations.
GermSystem absorb_same_order(const GermSystem& system);

struct WeightSplitting {
  /// r_1 < ... < r_k = N (1-based block ends).
  std::vector<std::size_t> breakpoints;
  /// Block value for each block.
  std::vector<Rational> block_weights;
};

/// Throws ValidationError for unsorted weights.
WeightSplitting weight_splitting(const WeightVector& weights);

/// generators + all k x k minors of the Jacobian, k = number of generators;
/// just the generators when k exceeds the number of variables.
std::vector<Polynomial> singular_locus_ideal(const std::vector<Polynomial>& generators);

enum class DimensionRoute { Global, Local };

/// Dimension of V(I) at the origin (Local: standard basis for the local
/// order) or of the affine variety (Global: grevlex basis). -1 when empty.
int ideal_dimension(const std::vector<Polynomial>& generators, DimensionRoute route,
                    const GroebnerOptions& options = {});

struct CompleteIntersectionCheck {
  std::optional<int> dimension;
  std::optional<int> sing_dimension;
  /// dimension == N - k and sing_dimension < N - k.
  std::optional<bool> reduced;
  /// sing_dimension <= 0.
  std::optional<bool> icis;
  std::string evidence;
};

/// Budget exhaustion leaves the affected fields empty.
CompleteIntersectionCheck check_complete_intersection(const std::vector<Polynomial>& generators,
                                                      DimensionRoute route,
                                                      const GroebnerOptions& options = {});

std::optional<bool> is_reduced_ci(const std::vector<Polynomial>& generators,
                                  DimensionRoute route, const GroebnerOptions& options = {});
std::optional<bool> is_icis(const std::vector<Polynomial>& generators, DimensionRoute route,
                            const GroebnerOptions& options = {});

struct SigmaComponent {
  std::string label;
  /// Number of leading coordinates cut (0 for Sing[X_0]).
  std::size_t cut = 0;
  std::vector<Polynomial> generators;
  /// Grevlex basis of the singular-locus ideal; empty when undetermined.
  std::vector<Polynomial> basis;
  /// nullopt when the computation ran out of budget.
  std::optional<int> dimension;
  /// Set when the zero set is a coordinate subspace, e.g. "V(x,z)".
  std::optional<std::string> coordinate_subspace;
  std::vector<std::size_t> vanishing_variables;
};

struct ObstructionLocus {
  std::vector<SigmaComponent> components;
  std::optional<int> total_dim;
  /// nullopt when some component is undetermined.
  std::optional<bool> is_origin_only;
};

ObstructionLocus sigma(const GermSystem& system, const GroebnerOptions& options = {});

/// min_i (ord f_{>p_i} - p_i); nullopt stands for +infinity (no perturbation).
std::optional<Rational> delta(const GermSystem& system);

struct ExponentBound {
  Rational value;
  /// False when the bound is 1 (same-order perturbation or no gap).
  bool nontrivial = false;
  std::string formula;
};

/// min{1 + delta/w_1, w_{r_1+1}/w_1}; the second term is dropped when r_1 = N.
/// Throws ValidationError when both terms are infinite.
ExponentBound exponent_bound(const GermSystem& system);

}  // namespace germlab
