#include "germlab/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "exact_linalg.hpp"
#include "germlab/error.hpp"

namespace germlab {

WeightVector::WeightVector(std::vector<Rational> weights) : w_(std::move(weights)) {
  for (const auto& w : w_) {
    if (sgn(w) <= 0) throw ValidationError("weights must be positive, got " + w.get_str());
  }
}

bool WeightVector::is_sorted() const { return std::is_sorted(w_.begin(), w_.end()); }

std::vector<Integer> WeightVector::primitive_integer() const {
  Integer lcm_den = 1;
  for (const auto& w : w_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), w.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& w : w_) {
    Rational scaled = w * Rational(lcm_den);
    out.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num_mpz_t());
  }
  if (g > 1) {
    for (auto& v : out) v /= g;
  }
  return out;
}

WeightVector WeightVector::permuted(std::span<const std::size_t> source_index) const {
  std::vector<Rational> out;
  out.reserve(source_index.size());
  for (auto k : source_index) out.push_back(w_.at(k));
  return WeightVector(std::move(out));
}

std::vector<std::string> WeightVector::to_strings() const {
  std::vector<std::string> out;
  for (const auto& w : w_) out.push_back(w.get_str());
  return out;
}

Rational weighted_degree(const Monomial& m, const WeightVector& w) {
  Rational d = 0;
  for (std::size_t k = 0; k < m.arity(); ++k) {
    if (m[k] != 0) d += w[k] * m[k];
  }
  return d;
}

namespace {

void check_weight_arity(const Polynomial& f, const WeightVector& w) {
  if (f.arity() != w.size()) {
    throw ArityError("weight vector has " + std::to_string(w.size()) +
                     " entries but the polynomial has " + std::to_string(f.arity()) +
                     " variables");
  }
}

}  // namespace

std::optional<Rational> weighted_order(const Polynomial& f, const WeightVector& w) {
  check_weight_arity(f, w);
  std::optional<Rational> best;
  for (const auto& [m, c] : f.terms()) {
    Rational d = weighted_degree(m, w);
    if (!best || d < *best) best = std::move(d);
  }
  return best;
}

Polynomial weighted_part(const Polynomial& f, const WeightVector& w,
                         const Rational& degree) {
  check_weight_arity(f, w);
  Polynomial out(f.variables());
  for (const auto& [m, c] : f.terms()) {
    if (weighted_degree(m, w) == degree) out.add_term(m, c);
  }
  return out;
}

bool is_weighted_homogeneous(const Polynomial& f, const WeightVector& w) {
  check_weight_arity(f, w);
  std::optional<Rational> first;
  for (const auto& [m, c] : f.terms()) {
    Rational d = weighted_degree(m, w);
    if (!first) {
      first = d;
    } else if (d != *first) {
      return false;
    }
  }
  return true;
}

WeightSplit split_by_weight(const Polynomial& f, const WeightVector& w) {
  auto order = weighted_order(f, w);
  if (!order) throw ValidationError("split_by_weight: zero polynomial");
  Polynomial principal = weighted_part(f, w, *order);
  return {principal, f - principal};
}

InferredWeights infer_weights(std::span<const Polynomial> system) {
  using Kind = WeightInferenceError::Kind;
  if (system.empty()) throw ValidationError("infer_weights: empty system");
  const std::size_t n = system.front().arity();
  const std::size_t r = system.size();
  const std::size_t cols = n + r;
  const auto& names = system.front().variables();

  detail::RationalMatrix rows;
  std::uint32_t appearing = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (system[i].arity() != n) throw ArityError("infer_weights: mixed arities");
    if (system[i].is_zero()) throw ValidationError("infer_weights: zero polynomial");
    for (const auto& [m, c] : system[i].terms()) {
      std::vector<Rational> row(cols, 0);
      for (std::size_t k = 0; k < n; ++k) row[k] = m[k];
      row[n + i] = -1;
      rows.push_back(std::move(row));
      appearing |= m.support_mask();
    }
  }

  auto echelon = detail::reduced_row_echelon(std::move(rows), cols);
  const std::size_t nullity = cols - echelon.pivots.size();
  if (nullity == 0) {
    throw WeightInferenceError(Kind::Inconsistent,
                               "not weighted-homogeneous: the weight equations "
                               "admit only the zero solution");
  }
  if (nullity > 1) {
    std::vector<std::string> free;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(appearing & (1u << k))) free.push_back(names[k]);
    }
    if (free.empty()) {
      std::set<std::size_t> pivots(echelon.pivots.begin(), echelon.pivots.end());
      for (std::size_t k = 0; k < n; ++k) {
        if (!pivots.count(k)) free.push_back(names[k]);
      }
    }
    std::string list;
    for (const auto& v : free) list += (list.empty() ? "" : ", ") + v;
    throw WeightInferenceError(
        Kind::Underdetermined,
        "weights are not determined by the system (solution space of dimension " +
            std::to_string(nullity) + "); free: " + list + "; supply weights explicitly",
        free);
  }

  std::size_t free_col = 0;
  {
    std::set<std::size_t> pivots(echelon.pivots.begin(), echelon.pivots.end());
    while (pivots.count(free_col)) ++free_col;
  }
  std::vector<Rational> solution(cols, 0);
  solution[free_col] = 1;
  for (std::size_t row = 0; row < echelon.rows.size(); ++row) {
    solution[echelon.pivots[row]] = -echelon.rows[row][free_col];
  }
  int sign = sgn(solution[0]);
  for (const auto& v : solution) {
    if (sgn(v) == 0 || sgn(v) != sign) {
      throw WeightInferenceError(Kind::NonPositive,
                                 "not weighted-homogeneous with positive weights");
    }
  }
  Rational min_degree = solution[n];
  for (std::size_t i = 0; i < r; ++i) {
    min_degree = sign > 0 ? std::min(min_degree, solution[n + i])
                          : std::max(min_degree, solution[n + i]);
  }
  for (auto& v : solution) v /= min_degree;

  InferredWeights out{
      WeightVector(std::vector<Rational>(solution.begin(), solution.begin() + n)),
      std::vector<Rational>(solution.begin() + n, solution.end()),
      {}};
  out.primitive = out.weights.primitive_integer();
  return out;
}

}  // namespace germlab
