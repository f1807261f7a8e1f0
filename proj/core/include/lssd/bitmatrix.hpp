#pragma once

#include "lssd/matrix.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace lssd {

// dense 01 matrix, rows packed 64 columns per word
class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(std::size_t r, std::size_t c)
      : rows_(r), cols_(c), wpr_((c + 63) / 64), w_(r * wpr_, 0) {}

  static BinMatrix identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t i, std::size_t j) const {
    return (w_[i * wpr_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool b) {
    std::uint64_t& word = w_[i * wpr_ + j / 64];
    std::uint64_t bit = std::uint64_t(1) << (j % 64);
    if (b)
      word |= bit;
    else
      word &= ~bit;
  }
  void flip(std::size_t i, std::size_t j) { set(i, j, !get(i, j)); }

  bool operator==(const BinMatrix&) const = default;

  const std::uint64_t* row_ptr(std::size_t i) const { return w_.data() + i * wpr_; }

  long long row_weight(std::size_t i) const {
    long long s = 0;
    const std::uint64_t* p = row_ptr(i);
    for (std::size_t t = 0; t < wpr_; ++t) s += std::popcount(p[t]);
    return s;
  }

  // popcount(row i of *this AND row j of o); column counts must agree
  long long row_and_weight(std::size_t i, const BinMatrix& o, std::size_t j) const {
    long long s = 0;
    const std::uint64_t* p = row_ptr(i);
    const std::uint64_t* q = o.row_ptr(j);
    for (std::size_t t = 0; t < wpr_; ++t) s += std::popcount(p[t] & q[t]);
    return s;
  }

  long long row_xor_weight(std::size_t i, const BinMatrix& o, std::size_t j) const {
    long long s = 0;
    const std::uint64_t* p = row_ptr(i);
    const std::uint64_t* q = o.row_ptr(j);
    for (std::size_t t = 0; t < wpr_; ++t) s += std::popcount(p[t] ^ q[t]);
    return s;
  }

  BinMatrix transpose() const {
    BinMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) t.set(j, i, true);
    return t;
  }

  BinMatrix complement() const {  // entrywise 01 flip
    BinMatrix c(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) c.set(i, j, !get(i, j));
    return c;
  }

  IntMat to_int() const {
    IntMat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = get(i, j) ? 1 : 0;
    return m;
  }

  static BinMatrix from_int(const IntMat& m);  // entries must be 0/1

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> w_;
};

// a · btᵀ, entries as common-support counts of row pairs
I64Mat mul01_bt(const BinMatrix& a, const BinMatrix& bt);
// a · b (transposes b internally)
I64Mat mul01(const BinMatrix& a, const BinMatrix& b);

}  // namespace lssd
