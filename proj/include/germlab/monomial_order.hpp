#pragma once

#include <compare>
#include <string>
#include <vector>

#include "germlab/monomial.hpp"
#include "germlab/weights.hpp"

namespace germlab {

/// Term orders used by the Groebner engine.
///
///   Grevlex         graded reverse lexicographic, x_1 > x_2 > ... > x_N
///   WeightedGrevlex weighted degree first, grevlex tiebreak
///   LocalDegree     lower total degree is larger (1 > every nonconstant m),
///                   reverse-lex tiebreak; not a well-order
///   Elimination     exponent of the last variable first, then grevlex on the
///                   rest; eliminates the last variable
///   Homogenized     on k[x_1..x_N, h] with h last: total degree, then higher
///                   h-exponent, then reverse-lex; restricted to homogeneous
///                   polynomials it induces LocalDegree after h := 1
class MonomialOrder {
 public:
  enum class Kind { Grevlex, WeightedGrevlex, LocalDegree, Elimination, Homogenized };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
  static MonomialOrder weighted(const WeightVector& w);
  static MonomialOrder local_degree() { return MonomialOrder(Kind::LocalDegree); }
  static MonomialOrder elimination() { return MonomialOrder(Kind::Elimination); }
  static MonomialOrder homogenized() { return MonomialOrder(Kind::Homogenized); }

  Kind kind() const { return kind_; }
  bool is_global() const { return kind_ != Kind::LocalDegree; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  std::string name() const;

 private:
  explicit MonomialOrder(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<long> weights_;
};

}  // namespace germlab
