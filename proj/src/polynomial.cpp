#include "germlab/polynomial.hpp"

#include <algorithm>

#include "germlab/error.hpp"

namespace germlab {

Polynomial::Polynomial(std::vector<std::string> variables)
    : variables_(std::move(variables)) {
  if (variables_.size() > kMaxVariables) {
    throw ArityError("at most " + std::to_string(kMaxVariables) +
                     " variables are supported");
  }
}

Polynomial Polynomial::constant(std::vector<std::string> variables,
                                const GaussianRational& value) {
  Polynomial p(std::move(variables));
  p.add_term(Monomial(p.arity()), value);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables,
                                std::size_t index) {
  Polynomial p(std::move(variables));
  if (index >= p.arity()) throw ArityError("variable index out of range");
  Monomial m(p.arity());
  m.set(index, 1);
  p.add_term(m, 1);
  return p;
}

Polynomial Polynomial::term(std::vector<std::string> variables, const Monomial& m,
                            const GaussianRational& c) {
  Polynomial p(std::move(variables));
  if (m.arity() != p.arity()) throw ArityError("monomial arity mismatch");
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::lowest_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

int Polynomial::degree_in(std::size_t index) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[index] > 0 ? m[index] : -1);
  return d;
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational Polynomial::constant_term() const {
  return coefficient(Monomial(arity()));
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (m.arity() != arity()) throw ArityError("monomial arity mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_arity(const Polynomial& other) const {
  if (arity() != other.arity()) {
    throw ArityError("polynomial arity mismatch (" + std::to_string(arity()) +
                     " vs " + std::to_string(other.arity()) + ")");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_arity(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_arity(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_arity(b);
  Polynomial out(a.variables_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::multiply_monomial(const Monomial& m,
                                         const GaussianRational& c) const {
  Polynomial out(variables_);
  if (c.is_zero()) return out;
  for (const auto& [mm, cc] : terms_) out.terms_.emplace(mm * m, cc * c);
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(variables_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= arity()) throw ArityError("variable index out of range");
  Polynomial out(variables_);
  for (const auto& [m, c] : terms_) {
    int e = m[index];
    if (e == 0) continue;
    Monomial dm = m;
    dm.set(index, e - 1);
    out.add_term(dm, c * GaussianRational(e));
  }
  return out;
}

Polynomial Polynomial::substitute(std::size_t index,
                                  const GaussianRational& value) const {
  if (index >= arity()) throw ArityError("variable index out of range");
  Polynomial out(variables_);
  for (const auto& [m, c] : terms_) {
    int e = m[index];
    GaussianRational factor = 1;
    for (int k = 0; k < e; ++k) factor *= value;
    Monomial sm = m;
    sm.set(index, 0);
    out.add_term(sm, c * factor);
  }
  return out;
}

Polynomial Polynomial::restrict_to_hyperplane(std::size_t index) const {
  if (index >= arity()) throw ArityError("variable index out of range");
  std::vector<std::string> vars;
  std::vector<std::size_t> source;
  for (std::size_t k = 0; k < arity(); ++k) {
    if (k == index) continue;
    vars.push_back(variables_[k]);
    source.push_back(k);
  }
  Polynomial out(vars);
  for (const auto& [m, c] : terms_) {
    if (m[index] != 0) continue;
    Monomial rm(vars.size());
    for (std::size_t k = 0; k < source.size(); ++k) rm.set(k, m[source[k]]);
    out.add_term(rm, c);
  }
  return out;
}

Polynomial Polynomial::permuted(std::vector<std::string> variables,
                                std::span<const std::size_t> source_index) const {
  if (variables.size() != source_index.size() || source_index.size() != arity()) {
    throw ArityError("permutation arity mismatch");
  }
  Polynomial out(std::move(variables));
  for (const auto& [m, c] : terms_) {
    Monomial pm(out.arity());
    for (std::size_t k = 0; k < source_index.size(); ++k) pm.set(k, m[source_index[k]]);
    out.add_term(pm, c);
  }
  return out;
}

Polynomial Polynomial::extended(std::vector<std::string> variables) const {
  if (variables.size() < arity()) throw ArityError("cannot extend to fewer variables");
  Polynomial out(std::move(variables));
  const std::size_t extra = out.arity() - arity();
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.extended(extra), c);
  return out;
}

Polynomial Polynomial::truncated(std::vector<std::string> variables) const {
  if (variables.size() > arity()) throw ArityError("cannot truncate to more variables");
  Polynomial out(std::move(variables));
  const std::size_t drop = arity() - out.arity();
  for (const auto& [m, c] : terms_) {
    for (std::size_t k = out.arity(); k < arity(); ++k) {
      if (m[k] != 0) throw ArityError("truncated variable occurs in polynomial");
    }
    out.terms_.emplace(m.truncated(drop), c);
  }
  return out;
}

Polynomial Polynomial::monic_at(const Monomial& m) const {
  GaussianRational c = coefficient(m);
  if (c.is_zero()) throw Error("monic_at: monomial not in support");
  Polynomial out = *this;
  if (c.is_one()) return out;
  GaussianRational inv = c.inverse();
  for (auto& [mm, cc] : out.terms_) cc *= inv;
  return out;
}

namespace {

std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t k = 0; k < m.arity(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[k];
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    int da = a->first.degree(), db = b->first.degree();
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    std::string mono = monomial_text(m, variables_);
    bool negative = c.is_real() && sgn(c.real()) < 0;
    std::string coeff;
    if (c.is_real()) {
      Rational a = abs(c.real());
      if (!(a == 1 && !mono.empty())) coeff = a.get_str();
    } else {
      coeff = c.to_string();
    }
    std::string body = coeff;
    if (!mono.empty()) body += (coeff.empty() ? "" : "*") + mono;
    if (first) {
      out += (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

PolynomialMatrix::PolynomialMatrix(std::size_t rows, std::size_t cols,
                                   const Polynomial& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

PolynomialMatrix jacobian(std::span<const Polynomial> system) {
  if (system.empty()) return {};
  const std::size_t n = system.front().arity();
  for (const auto& f : system) {
    if (f.arity() != n) throw ArityError("jacobian: mixed arities in system");
  }
  PolynomialMatrix jac(system.size(), n, Polynomial(system.front().variables()));
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) jac.at(i, j) = system[i].derivative(j);
  }
  return jac;
}

std::complex<double> evaluate_numeric(const Polynomial& f,
                                      std::span<const std::complex<double>> point) {
  if (point.size() != f.arity()) throw ArityError("evaluate_numeric: arity mismatch");
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : f.terms()) {
    std::complex<double> v = c.to_complex();
    for (std::size_t k = 0; k < m.arity(); ++k) {
      for (int e = 0; e < m[k]; ++e) v *= point[k];
    }
    sum += v;
  }
  return sum;
}

}  // namespace germlab
