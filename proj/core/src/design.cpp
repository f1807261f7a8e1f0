#include "lssd/design.hpp"

#include <sstream>

namespace lssd {

DesignParams validate_params(const Int& v, const Int& k, const Int& lambda) {
  if (v < 2) throw design_error("invalid design parameters: v < 2");
  if (lambda < 0) throw design_error("invalid design parameters: lambda < 0");
  if (!(lambda < k))
    throw design_error("invalid design parameters: ordering lambda < k fails");
  if (!(k < v)) throw design_error("invalid design parameters: ordering k < v fails");
  if (k * (k - 1) != lambda * (v - 1)) {
    std::ostringstream os;
    os << "invalid design parameters: k(k-1) = " << k * (k - 1)
       << " != lambda(v-1) = " << lambda * (v - 1);
    throw design_error(os.str());
  }
  DesignParams p;
  p.v = v;
  p.k = k;
  p.lambda = lambda;
  p.n = k - lambda;
  p.s = exact_sqrt(p.n);
  p.degenerate = (k == 1 || k == v - 1);
  return p;
}

DesignParams complement_params(const DesignParams& p) {
  return validate_params(p.v, p.v - p.k, p.v - 2 * p.k + p.lambda);
}

bool is_design_incidence(const BinMatrix& B, const DesignParams& p) {
  if (Int(B.rows()) != p.v || Int(B.cols()) != p.v)
    throw std::invalid_argument("is_design_incidence: matrix is not v x v");
  // parameters fit machine words whenever a v x v matrix fits in memory
  long long nn = static_cast<long long>(p.n);
  long long ll = static_cast<long long>(p.lambda);
  BinMatrix Bt = B.transpose();
  std::size_t v = B.rows();
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) {
      long long want = (i == j) ? nn + ll : ll;
      if (B.row_and_weight(i, B, j) != want) return false;    // B B^T
      if (Bt.row_and_weight(i, Bt, j) != want) return false;  // B^T B
    }
  return true;
}

bool is_design_incidence(const IntMat& B, const DesignParams& p) {
  return is_design_incidence(BinMatrix::from_int(B), p);
}

}  // namespace lssd
