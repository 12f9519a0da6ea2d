#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "germlab/monomial_order.hpp"
#include "germlab/polynomial.hpp"

namespace germlab {

struct GroebnerOptions {
  /// Maximum number of reduction steps for one basis computation.
  std::size_t budget = 1'000'000;
};

/// Reduced, monic basis of an ideal for a fixed order. For the local order the
/// basis is a minimal standard basis (tails are not reduced).
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial> generators,
                std::vector<Polynomial> source, std::size_t arity);

  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& source_ideal() const { return source_; }
  std::size_t arity() const { return arity_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }

  bool is_unit() const;
  bool is_zero_ideal() const { return generators_.empty(); }

 private:
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> source_;
  std::size_t arity_;
  std::vector<Monomial> leading_;
};

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);
GaussianRational leading_coefficient(const Polynomial& f, const MonomialOrder& order);

/// Buchberger's algorithm: normal selection strategy (smallest lcm degree, then
/// smallest lcm in the order, then pair indices), Gebauer-Moeller pair
/// criteria, final interreduction. Throws BudgetExhausted.
GroebnerBasis buchberger(std::span<const Polynomial> generators,
                         const MonomialOrder& order, const GroebnerOptions& options = {});

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum q_i g_i + remainder, with no term of the
/// remainder divisible by a leading monomial. Global orders only.
Division divide(const Polynomial& f, std::span<const Polynomial> divisors,
                const MonomialOrder& order);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

/// Largest set of variables containing no leading-monomial support; -1 for
/// the unit ideal. With a local basis this is the dimension of the germ at 0.
int krull_dimension(const GroebnerBasis& basis);

/// Number of standard monomials; std::nullopt when the staircase is infinite.
std::optional<std::size_t> quotient_dimension(const GroebnerBasis& basis);

/// Generators (a reduced grevlex basis) of (I : g^infinity), computed by
/// eliminating t from I + (1 - t g).
std::vector<Polynomial> saturation(std::span<const Polynomial> generators,
                                   const Polynomial& g,
                                   const GroebnerOptions& options = {});

/// f in the radical of the ideal: 1 in I + (1 - t f).
bool radical_membership(const Polynomial& f, std::span<const Polynomial> generators,
                        const GroebnerOptions& options = {});

/// All k x k minors, rows-subsets outer and column-subsets inner, both
/// lexicographic. Throws ValidationError when k is out of range.
std::vector<Polynomial> minors(const PolynomialMatrix& matrix, std::size_t k);

/// Standard basis for the local degree order (localization at the origin),
/// computed by homogenizing, running Buchberger for the homogenized order and
/// dehomogenizing.
GroebnerBasis local_standard_basis(std::span<const Polynomial> generators,
                                   const GroebnerOptions& options = {});

/// Local Milnor number dim O/(df); std::nullopt when the singularity is not
/// isolated. Precondition: f(0) = 0, f != 0.
std::optional<std::size_t> milnor_number_hypersurface(const Polynomial& f,
                                                      const GroebnerOptions& options = {});

}  // namespace germlab
