#include "idealis/feasibility.hpp"

#include <cstddef>
#include <stdexcept>

namespace idealis {

// Phase-1 simplex over the rationals.  We look for lambda >= 0 with
// lhs * lambda = rhs by minimising the sum of artificial variables; the
// system is feasible exactly when that minimum is zero.  Bland's rule on
// both the entering and leaving choices makes the iteration finite, and
// every pivot stays in mpq so there is no tolerance anywhere.
bool has_nonnegative_solution(RationalMatrix lhs, RationalVector rhs) {
  const std::size_t rows = lhs.size();
  if (rhs.size() != rows)
    throw std::invalid_argument("system has mismatched row counts");
  std::size_t cols = rows == 0 ? 0 : lhs.front().size();
  for (const RationalVector& row : lhs)
    if (row.size() != cols)
      throw std::invalid_argument("system has ragged rows");
  if (rows == 0) return true;

  // Normalise so every right-hand side is nonnegative, then append the
  // artificial identity block.
  const std::size_t total = cols + rows;
  std::vector<RationalVector> tab(rows, RationalVector(total, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    bool flip = rhs[i] < 0;
    for (std::size_t j = 0; j < cols; ++j)
      tab[i][j] = flip ? -lhs[i][j] : lhs[i][j];
    if (flip) rhs[i] = -rhs[i];
    tab[i][cols + i] = 1;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  while (true) {
    // Reduced costs are recomputed from scratch each round; cheap at the
    // sizes we see and immune to accumulated bookkeeping mistakes.
    std::size_t enter = total;
    for (std::size_t j = 0; j < total && enter == total; ++j) {
      Rational rc = j >= cols ? Rational(1) : Rational(0);
      for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] >= cols) rc -= tab[i][j];
      if (rc < 0) enter = j;
    }
    if (enter == total) break;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / tab[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows)
      throw std::logic_error("phase-1 objective cannot be unbounded");

    Rational pivot = tab[leave][enter];
    for (std::size_t j = 0; j < total; ++j) tab[leave][j] /= pivot;
    rhs[leave] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rational factor = tab[i][enter];
      for (std::size_t j = 0; j < total; ++j)
        tab[i][j] -= factor * tab[leave][j];
      rhs[i] -= factor * rhs[leave];
    }
    basis[leave] = enter;
  }

  Rational objective(0);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] >= cols) objective += rhs[i];
  return objective == 0;
}

}  // namespace idealis
