#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cvw/error.hpp"

namespace cvw {

// Taylor coefficients c[p] of exp(u^T A u / 2) = sum_p c[p] u^p for all
// exponent vectors p inside a box (p_i < extents_i). Differentiating the
// generating function gives the exact recursion
//   p_a c[p] = sum_b A_ab c[p - e_a - e_b],
// evaluated in mixed-radix index order so every dependency is ready.
template <typename Scalar>
class ExpQuadraticSeries {
 public:
  using MatrixS = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  ExpQuadraticSeries(const MatrixS& a, std::vector<int> extents) : extents_(std::move(extents)) {
    const int nv = static_cast<int>(extents_.size());
    if (a.rows() != nv || a.cols() != nv)
      throw Error(ErrorCode::DimensionMismatch, "series matrix does not match the variable count");
    strides_.assign(nv, 1);
    std::size_t total = 1;
    for (int i = 0; i < nv; ++i) {
      if (extents_[i] < 1) throw Error(ErrorCode::InvalidArgument, "series extents must be >= 1");
      strides_[i] = total;
      total *= static_cast<std::size_t>(extents_[i]);
    }
    c_.assign(total, Scalar(0));
    c_[0] = Scalar(1);
    std::vector<int> p(nv, 0);
    for (std::size_t idx = 1; idx < total; ++idx) {
      for (int i = 0; i < nv; ++i) {  // increment the mixed-radix counter
        if (++p[i] < extents_[i]) break;
        p[i] = 0;
      }
      int a_var = 0;
      while (p[a_var] == 0) ++a_var;
      const std::size_t q = idx - strides_[a_var];
      Scalar s(0);
      for (int b = 0; b < nv; ++b) {
        const int qb = p[b] - (b == a_var ? 1 : 0);
        if (qb > 0) s += a(a_var, b) * c_[q - strides_[b]];
      }
      c_[idx] = s / Scalar(p[a_var]);
    }
  }

  Scalar operator()(std::span<const int> p) const { return c_[index(p)]; }

  std::size_t index(std::span<const int> p) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < p.size(); ++i) idx += strides_[i] * static_cast<std::size_t>(p[i]);
    return idx;
  }

  const std::vector<Scalar>& coefficients() const { return c_; }
  const std::vector<int>& extents() const { return extents_; }

 private:
  std::vector<int> extents_;
  std::vector<std::size_t> strides_;
  std::vector<Scalar> c_;
};

// Single coefficient [u^target] exp(u^T A u / 2); variables with zero target
// exponent are dropped before the expansion.
template <typename Scalar>
Scalar exp_quadratic_coefficient(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                                 std::span<const int> target) {
  std::vector<int> keep, ext;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i] < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    if (target[i] > 0) {
      keep.push_back(static_cast<int>(i));
      ext.push_back(target[i] + 1);
    }
  }
  if (keep.empty()) return Scalar(1);
  const int k = static_cast<int>(keep.size());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = a(keep[i], keep[j]);
  ExpQuadraticSeries<Scalar> series(sub, ext);
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = ext[i] - 1;
  return series(p);
}

}  // namespace cvw
