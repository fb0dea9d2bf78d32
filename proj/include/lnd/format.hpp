#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lnd/rational.hpp"

namespace lnd {

// Joins (coefficient, monomial) pairs into the shared textual form:
// "x1*x2 - 3/2*x1 + 1". An empty monomial string denotes the unit; an empty
// list prints "0".
std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms);

// "x3", "x3^2", "x1^-1"
std::string power_string(std::size_t var_index, int exponent);

}  // namespace lnd
