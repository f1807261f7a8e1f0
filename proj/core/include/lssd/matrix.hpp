#pragma once

#include "lssd/numbers.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lssd {

// dense row-major matrix over an exact scalar type
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t r, std::size_t c, const T& init = T{}) : rows_(r), cols_(c), e_(r * c, init) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }
  static Mat ones(std::size_t r, std::size_t c) { return Mat(r, c, T{1}); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool operator==(const Mat&) const = default;

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> e_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;
using I64Mat = Mat<long long>;

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  Mat<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
  return mat_mul(a, b);
}

template <class T>
Mat<T> operator+(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix add: dimension mismatch");
  Mat<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

template <class T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sub: dimension mismatch");
  Mat<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

template <class T>
Mat<T> operator*(const T& s, const Mat<T>& a) {
  Mat<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

template <class T>
Mat<T> kronecker(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == T{}) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          c(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return c;
}

inline IntMat to_int(const I64Mat& m) {
  IntMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

// rank over Q by fraction-free (Bareiss) elimination with full pivoting
std::size_t rank_exact(const IntMat& m);
std::size_t rank_exact(const RatMat& m);

}  // namespace lssd
