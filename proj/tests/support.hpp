#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "germlab/polynomial.hpp"

namespace testing_support {

inline std::vector<std::string> variable_names(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v"};
  return {names, names + n};
}

// Random polynomial with small integer (occasionally Gaussian) coefficients.
inline germlab::Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n,
                                             int max_degree, int max_terms,
                                             bool gaussian = false) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  germlab::Polynomial p(variable_names(n));
  const int count = terms(rng);
  for (int k = 0; k < count; ++k) {
    const int d = deg(rng);
    germlab::Monomial m(n);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    for (int e = 0; e < d; ++e) {
      std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    int c = coeff(rng);
    if (c == 0) c = 1;
    germlab::GaussianRational gc(c);
    if (gaussian && coeff(rng) > 1) gc += germlab::GaussianRational(0, coeff(rng));
    p.add_term(m, gc);
  }
  return p;
}

inline germlab::Polynomial random_monomial(std::mt19937_64& rng, std::size_t n,
                                           int max_exponent) {
  std::uniform_int_distribution<int> e(0, max_exponent);
  germlab::Monomial m(n);
  for (std::size_t k = 0; k < n; ++k) m.set(k, e(rng));
  if (m.is_one()) m.set(0, 1);
  return germlab::Polynomial::term(variable_names(n), m, 1);
}

}  // namespace testing_support
