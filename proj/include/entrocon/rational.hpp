#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace entrocon {

/// Arbitrary-precision rational. Used by the exact-arithmetic mode of the
/// gallery constructors, factorization product checks and the explicit
/// subset-swap coupling, where the identities hold exactly.
using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix of rationals. Deliberately minimal: the exact mode only
/// needs products, sums and equality.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  RatMat operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMat: dimension mismatch");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rational& v = (*this)(i, k);
        if (v == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const Rational& w = o(k, j);
          if (w != 0) r(i, j) += v * w;
        }
      }
    return r;
  }

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool row_stochastic() const {
    for (int i = 0; i < rows_; ++i) {
      Rational s = 0;
      for (int j = 0; j < cols_; ++j) {
        if ((*this)(i, j) < 0) return false;
        s += (*this)(i, j);
      }
      if (s != 1) return false;
    }
    return true;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

using RatVec = std::vector<Rational>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// pi as a row vector times kernel: (pi K)(y).
inline RatVec left_apply(const RatVec& pi, const RatMat& K) {
  if (static_cast<int>(pi.size()) != K.rows())
    throw std::invalid_argument("left_apply: dimension mismatch");
  RatVec out(K.cols(), Rational(0));
  for (int i = 0; i < K.rows(); ++i) {
    if (pi[i] == 0) continue;
    for (int j = 0; j < K.cols(); ++j)
      if (K(i, j) != 0) out[j] += pi[i] * K(i, j);
  }
  return out;
}

/// Reverse channel in exact arithmetic; zero-mass output rows default to pi.
inline RatMat reverse_kernel_exact(const RatVec& pi, const RatMat& K) {
  RatVec piK = left_apply(pi, K);
  RatMat R(K.cols(), K.rows());
  for (int y = 0; y < K.cols(); ++y) {
    if (piK[y] == 0) {
      for (int x = 0; x < K.rows(); ++x) R(y, x) = pi[x];
    } else {
      for (int x = 0; x < K.rows(); ++x) R(y, x) = pi[x] * K(x, y) / piK[y];
    }
  }
  return R;
}

}  // namespace entrocon
