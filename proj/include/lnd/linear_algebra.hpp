#pragma once

#include <cstddef>
#include <vector>

#include "lnd/rational.hpp"

namespace lnd {

using Matrix = std::vector<std::vector<Rational>>;

// In-place Gauss-Jordan elimination to reduced row echelon form; zero rows
// are dropped. Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(Matrix& m, std::size_t columns);

std::size_t rank(Matrix m, std::size_t columns);

// Basis of {v : m v = 0}, returned in reduced row echelon form.
Matrix nullspace(Matrix m, std::size_t columns);

}  // namespace lnd
