#include "lssd/matrix.hpp"

#include <algorithm>
#include <utility>

namespace lssd {

std::size_t rank_exact(const IntMat& m) {
  std::size_t nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  IntMat a = m;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t step = 0; step < std::min(nr, nc); ++step) {
    // full pivot: any nonzero in the trailing submatrix
    std::size_t pi = step, pj = step;
    bool found = false;
    for (std::size_t i = step; i < nr && !found; ++i)
      for (std::size_t j = step; j < nc && !found; ++j)
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != step)
      for (std::size_t j = 0; j < nc; ++j) std::swap(a(step, j), a(pi, j));
    if (pj != step)
      for (std::size_t i = 0; i < nr; ++i) std::swap(a(i, step), a(i, pj));
    for (std::size_t i = step + 1; i < nr; ++i) {
      for (std::size_t j = step + 1; j < nc; ++j)
        a(i, j) = (a(step, step) * a(i, j) - a(i, step) * a(step, j)) / prev;
      a(i, step) = 0;
    }
    prev = a(step, step);
    ++r;
  }
  return r;
}

std::size_t rank_exact(const RatMat& m) {
  // clear denominators row by row; row scaling preserves rank
  IntMat a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int d = denominator(m(i, j));
      lcm = lcm / gcd(lcm, d) * d;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& q = m(i, j);
      a(i, j) = numerator(q) * (lcm / denominator(q));
    }
  }
  return rank_exact(a);
}

}  // namespace lssd
