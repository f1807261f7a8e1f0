#include "lssd/bitmatrix.hpp"

#include <stdexcept>

namespace lssd {

BinMatrix BinMatrix::from_int(const IntMat& m) {
  BinMatrix b(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int& e = m(i, j);
      if (e == 1)
        b.set(i, j, true);
      else if (e != 0)
        throw std::invalid_argument("BinMatrix::from_int: entry not 0/1");
    }
  return b;
}

I64Mat mul01_bt(const BinMatrix& a, const BinMatrix& bt) {
  if (a.cols() != bt.cols())
    throw std::invalid_argument("mul01_bt: inner dimension mismatch");
  I64Mat c(a.rows(), bt.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < bt.rows(); ++j) c(i, j) = a.row_and_weight(i, bt, j);
  return c;
}

I64Mat mul01(const BinMatrix& a, const BinMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul01: inner dimension mismatch");
  return mul01_bt(a, b.transpose());
}

}  // namespace lssd
