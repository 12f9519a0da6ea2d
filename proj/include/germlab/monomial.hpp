#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace germlab {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of fixed arity. Stored inline; the arity cap covers the
/// ambient variables plus the auxiliary ones (homogenizer, Rabinowitsch t).
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  std::size_t arity() const { return n_; }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value);

  int degree() const;
  bool is_one() const;

  /// Divisibility: this | other.
  bool divides(const Monomial& other) const;
  /// Indices of variables with positive exponent, as a bitmask.
  std::uint32_t support_mask() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; precondition: divisor divides this.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Copy with one more (zero) variable appended.
  Monomial extended(std::size_t extra = 1) const;
  /// Copy with the last `count` variables removed.
  Monomial truncated(std::size_t count = 1) const;

  /// Lexicographic, x_1 most significant. Used for canonical storage only.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < std::max(a.n_, b.n_); ++i) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    }
    return a.n_ <=> b.n_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  std::array<Exponent, kMaxVariables> e_{};
  std::uint8_t n_ = 0;
};

}  // namespace germlab
