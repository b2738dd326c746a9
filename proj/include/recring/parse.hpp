#ifndef RECRING_PARSE_HPP
#define RECRING_PARSE_HPP

#include "recring/polynomial.hpp"

#include <string_view>

namespace recring {

/// Parses the canonical text grammar: signed integer and variable
/// factors ("x" + index) joined by "*", terms joined by "+" or "-",
/// whitespace ignored. No parentheses or exponent syntax; repeated
/// variable factors accumulate. Throws std::invalid_argument on
/// malformed input.
Polynomial parse_polynomial(std::string_view text, const CoefficientRing& ring);

} // namespace recring

#endif
