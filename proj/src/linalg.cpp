#include "thv/linalg.hpp"

#include <cassert>

#include "thv/errors.hpp"

namespace thv {

namespace {

Integer lcm_int(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const std::vector<std::vector<Rational>>& rows,
                                                std::size_t ncols) {
  // Clear denominators row by row; drop zero rows.
  std::vector<std::vector<Integer>> a;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw UsageError("kernel_basis: ragged matrix");
    Integer mult = 1;
    bool nonzero = false;
    for (const Rational& q : row) {
      if (q != 0) nonzero = true;
      mult = lcm_int(mult, denominator(q));
    }
    if (!nonzero) continue;
    std::vector<Integer> irow(ncols);
    for (std::size_t j = 0; j < ncols; ++j)
      irow[j] = numerator(row[j]) * (mult / denominator(row[j]));
    a.push_back(std::move(irow));
  }

  // Fraction-free forward elimination (Bareiss), first-nonzero pivoting.
  std::vector<std::size_t> pivot_col;
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      for (std::size_t j = 0; j < ncols; ++j) {
        if (j == col) continue;
        Integer num = a[rank][col] * a[r][j] - a[r][col] * a[rank][j];
        assert(num % prev == 0);
        a[r][j] = num / prev;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  // One kernel vector per free column, solved bottom-up over the rationals.
  std::vector<std::vector<Rational>> kernel;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(ncols, Rational(0));
    x[f] = 1;
    for (std::size_t i = rank; i-- > 0;) {
      const std::size_t p = pivot_col[i];
      Rational s(0);
      for (std::size_t j = p + 1; j < ncols; ++j)
        if (x[j] != 0) s += Rational(a[i][j]) * x[j];
      x[p] = -s / Rational(a[i][p]);
    }
    // Normalize: primitive integer vector, positive leading entry.
    Integer mult = 1;
    for (const Rational& q : x) mult = lcm_int(mult, denominator(q));
    Integer content = 0;
    for (Rational& q : x) {
      q *= Rational(mult);
      content = gcd(content, numerator(q));
    }
    if (content != 0)
      for (Rational& q : x) q /= Rational(content);
    for (const Rational& q : x) {
      if (q == 0) continue;
      if (q < 0)
        for (Rational& y : x) y = -y;
      break;
    }
    kernel.push_back(std::move(x));
  }
  return kernel;
}

}  // namespace thv
