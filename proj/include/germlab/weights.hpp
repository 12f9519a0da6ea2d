#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "germlab/polynomial.hpp"
#include "germlab/rational.hpp"

namespace germlab {

/// Positive rational weights, one per variable.
class WeightVector {
 public:
  WeightVector() = default;
  /// Throws ValidationError unless every weight is > 0.
  explicit WeightVector(std::vector<Rational> weights);

  std::size_t size() const { return w_.size(); }
  const Rational& operator[](std::size_t i) const { return w_[i]; }
  const std::vector<Rational>& values() const { return w_; }

  /// True when w_1 <= ... <= w_N.
  bool is_sorted() const;
  /// Clears denominators and divides by the gcd.
  std::vector<Integer> primitive_integer() const;
  WeightVector permuted(std::span<const std::size_t> source_index) const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> w_;
};

Rational weighted_degree(const Monomial& m, const WeightVector& w);

/// min over the support of <w, a>; std::nullopt stands for +infinity (f = 0).
std::optional<Rational> weighted_order(const Polynomial& f, const WeightVector& w);

/// Terms with <w, a> == degree.
Polynomial weighted_part(const Polynomial& f, const WeightVector& w,
                         const Rational& degree);

bool is_weighted_homogeneous(const Polynomial& f, const WeightVector& w);

struct WeightSplit {
  Polynomial principal;
  Polynomial rest;
};

/// principal = lowest weighted part, rest = f - principal. Throws on f = 0.
WeightSplit split_by_weight(const Polynomial& f, const WeightVector& w);

struct InferredWeights {
  WeightVector weights;
  /// Weighted degrees p_i, scaled so that min_i p_i = 1.
  std::vector<Rational> degrees;
  /// Primitive integer form of the weights.
  std::vector<Integer> primitive;
};

/// Solves <w, a> = p_i over all exponents a of every f_i exactly.
/// Throws WeightInferenceError when the system is inconsistent, admits no
/// positive solution, or leaves weights undetermined.
InferredWeights infer_weights(std::span<const Polynomial> system);

}  // namespace germlab
