#include "germlab/rational.hpp"

#include <cctype>

#include "germlab/error.hpp"
#include "germlab/gaussian.hpp"

namespace germlab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (num.starts_with('+')) num.erase(0, 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+') {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  Integer d(den);
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error("division by zero in Q(i)");
  if (sgn(im_) == 0) return {1 / re_, 0};
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0 && sgn(im_) == 0) {
    if (sgn(o.re_) == 0) throw Error("division by zero in Q(i)");
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  Rational abs_im = abs(im_);
  std::string imag_part = abs_im == 1 ? "i" : abs_im.get_str() + "*i";
  std::string out = "(";
  if (sgn(re_) != 0) {
    out += re_.get_str();
    out += sgn(im_) < 0 ? "-" : "+";
  } else if (sgn(im_) < 0) {
    out += "-";
  }
  out += imag_part;
  out += ")";
  return out;
}

}  // namespace germlab
