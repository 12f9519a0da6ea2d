#include "germlab/monomial.hpp"

#include <limits>

#include "germlab/error.hpp"

namespace germlab {

namespace {

void check_arity_cap(std::size_t arity) {
  if (arity > kMaxVariables) {
    throw ArityError("at most " + std::to_string(kMaxVariables) +
                     " variables are supported");
  }
}

Monomial::Exponent checked_exponent(long value) {
  if (value < 0) throw Error("negative exponent");
  if (value > std::numeric_limits<Monomial::Exponent>::max()) {
    throw Error("exponent overflow");
  }
  return static_cast<Monomial::Exponent>(value);
}

}  // namespace

Monomial::Monomial(std::size_t arity) {
  check_arity_cap(arity);
  n_ = static_cast<std::uint8_t>(arity);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    e_[i] = checked_exponent(exponents[i]);
  }
}

void Monomial::set(std::size_t i, int value) { e_[i] = checked_exponent(value); }

int Monomial::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != 0) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != 0) mask |= (1u << i);
  }
  return mask;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    out.e_[i] = checked_exponent(static_cast<long>(e_[i]) + other.e_[i]);
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    out.e_[i] = static_cast<Exponent>(e_[i] - divisor.e_[i]);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < n_; ++i) out.e_[i] = std::max(e_[i], other.e_[i]);
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::extended(std::size_t extra) const {
  check_arity_cap(n_ + extra);
  Monomial out = *this;
  out.n_ = static_cast<std::uint8_t>(n_ + extra);
  return out;
}

Monomial Monomial::truncated(std::size_t count) const {
  Monomial out = *this;
  for (std::size_t i = n_ - count; i < n_; ++i) out.e_[i] = 0;
  out.n_ = static_cast<std::uint8_t>(n_ - count);
  return out;
}

}  // namespace germlab
