#pragma once

#include "lssd/bitmatrix.hpp"
#include "lssd/numbers.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace lssd {

struct design_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// symmetric 2-design parameters: k(k-1) = lambda(v-1), 0 <= lambda < k < v
struct DesignParams {
  Int v, k, lambda;
  Int n;                 // order k - lambda
  std::optional<Int> s;  // set when k - lambda is a perfect square
  bool degenerate = false;  // k = 1 or k = v-1
};

// throws design_error naming the violated constraint
DesignParams validate_params(const Int& v, const Int& k, const Int& lambda);

// (v, v-k, v-2k+lambda); involution, preserves the order n
DesignParams complement_params(const DesignParams& p);

// B^T B = B B^T = (k-lambda) I + lambda J, exactly
bool is_design_incidence(const BinMatrix& B, const DesignParams& p);
bool is_design_incidence(const IntMat& B, const DesignParams& p);

}  // namespace lssd
