#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "germlab/polynomial.hpp"

namespace germlab {

/// Parses text such as "z^5 + x^15 + x*y^7 + i*z*y^6" over the declared
/// variables. `i` is the imaginary unit and cannot be declared as a variable.
/// Multiplication is always explicit. Parenthesized subexpressions, optionally
/// raised to a power, are accepted; division is only allowed between integer
/// literals.
///
/// Throws ParseError (with byte offset) on syntax errors, undeclared
/// identifiers, negative exponents and zero denominators; ValidationError on a
/// bad variable list.
Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& variables);

void validate_variable_names(const std::vector<std::string>& variables);

}  // namespace germlab
