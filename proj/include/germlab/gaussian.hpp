#pragma once

#include <complex>
#include <string>

#include "germlab/rational.hpp"

namespace germlab {

/// Exact element re + im*i of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0)  // NOLINT
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational imaginary_unit() { return {0, 1}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
    return a /= b;
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Grammar-compatible text: "3/2", "-5", "(1/2+3*i)", "(-i)".
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

}  // namespace germlab
