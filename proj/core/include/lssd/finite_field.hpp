#pragma once

#include <vector>

namespace lssd {

// GF(q) for prime powers q <= 64, with elements 0..q-1 encoded as base-p
// digit vectors of polynomial coefficients.  Field axioms are checked
// exhaustively on construction.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int q() const { return q_; }
  int p() const { return p_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) +
           static_cast<std::size_t>(b);
  }

  int q_ = 0, p_ = 0, e_ = 0;
  std::vector<int> add_, mul_;
};

}  // namespace lssd
