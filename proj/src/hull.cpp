#include "kr/hull.hpp"

#include <stdexcept>

namespace kr {

bool convex_hull_contains(const std::vector<QVec>& points, const QVec& v) {
  if (points.empty()) return false;
  const std::size_t dim = v.size();
  for (const QVec& p : points)
    if (p.size() != dim) throw std::invalid_argument("convex_hull_contains: length mismatch");

  // Constraints: sum_k lambda_k p_k = v, sum_k lambda_k = 1, lambda >= 0.
  const std::size_t rows = dim + 1;
  const std::size_t k = points.size();
  const std::size_t cols = k + rows;  // structural + artificial
  std::vector<QVec> tab(rows, QVec(cols + 1, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    Rational rhs = i < dim ? v[i] : Rational(1);
    Rational sign = rhs < 0 ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < k; ++j) tab[i][j] = sign * (i < dim ? points[j][i] : Rational(1));
    tab[i][k + i] = 1;
    tab[i][cols] = sign * rhs;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = k + i;

  // Phase-one objective: minimise the sum of artificials. z[j] holds reduced costs.
  QVec z(cols + 1, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) z[j] -= tab[i][j];
    z[cols] -= tab[i][cols];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (z[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][cols] / tab[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen for phase one

    Rational piv = tab[leave][enter];
    for (Rational& x : tab[leave]) x /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rational f = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (z[enter] != 0) {
      Rational f = z[enter];
      for (std::size_t j = 0; j <= cols; ++j) z[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  return z[cols] == 0;
}

}  // namespace kr
