#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "germlab/gaussian.hpp"
#include "germlab/monomial.hpp"

namespace germlab {

/// Sparse multivariate polynomial over Q(i). Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, GaussianRational>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(std::vector<std::string> variables,
                             const GaussianRational& value);
  static Polynomial variable(std::vector<std::string> variables, std::size_t index);
  static Polynomial term(std::vector<std::string> variables, const Monomial& m,
                         const GaussianRational& c);

  std::size_t arity() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int lowest_degree() const;
  /// Highest exponent of x_index, -1 if the variable does not occur.
  int degree_in(std::size_t index) const;

  GaussianRational coefficient(const Monomial& m) const;
  GaussianRational constant_term() const;

  /// Accumulates c*m into the polynomial, erasing the term when it cancels.
  void add_term(const Monomial& m, const GaussianRational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const GaussianRational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity() == b.arity() && a.terms_ == b.terms_;
  }

  Polynomial multiply_monomial(const Monomial& m, const GaussianRational& c) const;
  Polynomial pow(unsigned exponent) const;

  /// Formal partial derivative with respect to variable `index`.
  Polynomial derivative(std::size_t index) const;
  /// Substitutes x_index := value, keeping the arity.
  Polynomial substitute(std::size_t index, const GaussianRational& value) const;
  /// Drops variable `index` after substituting 0.
  Polynomial restrict_to_hyperplane(std::size_t index) const;
  /// Re-expresses the polynomial in `variables`, where variable k of the result is
  /// variable `source_index[k]` of this polynomial.
  Polynomial permuted(std::vector<std::string> variables,
                      std::span<const std::size_t> source_index) const;
  /// Same terms in a ring with extra trailing variables.
  Polynomial extended(std::vector<std::string> variables) const;
  /// Drops trailing variables; precondition: they do not occur.
  Polynomial truncated(std::vector<std::string> variables) const;

  /// Divides by a nonzero constant so that the coefficient of `m` becomes 1.
  Polynomial monic_at(const Monomial& m) const;

  /// Canonical text in the input grammar; terms by descending degree then lex.
  std::string to_string() const;

 private:
  void check_arity(const Polynomial& other) const;

  std::vector<std::string> variables_;
  TermMap terms_;
};

/// Dense matrix of polynomials (Jacobians, minors input).
class PolynomialMatrix {
 public:
  PolynomialMatrix() = default;
  PolynomialMatrix(std::size_t rows, std::size_t cols, const Polynomial& fill);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

/// Entry (i, j) is the formal derivative of system[i] with respect to x_j.
PolynomialMatrix jacobian(std::span<const Polynomial> system);

/// Direct sparse evaluation in double precision. The error grows with the term
/// count and the conditioning of the sum; nothing is certified.
std::complex<double> evaluate_numeric(const Polynomial& f,
                                      std::span<const std::complex<double>> point);

}  // namespace germlab
