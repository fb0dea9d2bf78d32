#include "lnd/linear_algebra.hpp"

namespace lnd {

std::vector<std::size_t> rref(Matrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = m[row][col].inverse();
    for (std::size_t j = col; j < columns; ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t j = col; j < columns; ++j)
        if (!m[row][j].is_zero()) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::size_t rank(Matrix m, std::size_t columns) { return rref(m, columns).size(); }

Matrix nullspace(Matrix m, std::size_t columns) {
  const auto pivots = rref(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns);
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  rref(basis, columns);
  return basis;
}

}  // namespace lnd
