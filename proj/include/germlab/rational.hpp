#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace germlab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Accepts "a", "-a" or "a/b" with decimal integers; the result is canonical.
Rational parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace germlab
