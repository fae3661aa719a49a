#pragma once

#include <string_view>

#include "kappa/matrix.hpp"

namespace kappa {

// Parses a quadratic form such as "y1^2 + 2*y1*y2 - 3/2*y2^2" into its Gram
// matrix over Q.  Off-diagonal entries get half the y_i*y_j coefficient, so
// the square of a linear form with coefficient vector a maps to a a^T.
// Constant and linear terms are rejected.
Mat<Rational> parse_form(std::string_view text, Index d);

}  // namespace kappa
