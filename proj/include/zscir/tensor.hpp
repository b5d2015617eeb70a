#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "zscir/rng.hpp"

namespace zscir {

// Dense row-major matrix of 64-bit floats. Vectors are represented as 1xN or
// Nx1 as the call site requires. Zero extents are allowed (an empty
// contraction in matmul yields zeros).
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Tensor zeros(std::size_t rows, std::size_t cols) { return Tensor(rows, cols); }

  static Tensor full(std::size_t rows, std::size_t cols, double value) {
    Tensor t(rows, cols);
    for (auto& x : t.data_) x = value;
    return t;
  }

  static Tensor identity(std::size_t n) {
    Tensor t(n, n);
    for (std::size_t i = 0; i < n; ++i) t.at(i, i) = 1.0;
    return t;
  }

  static Tensor gaussian(std::size_t rows, std::size_t cols, Rng& rng, double scale = 1.0) {
    Tensor t(rows, cols);
    for (auto& x : t.data_) x = scale * rng.normal();
    return t;
  }

  static Tensor from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

  bool same_shape(const Tensor& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
  std::string shape_str() const;

  bool all_finite() const;
  double max_abs() const;
  void fill(double v) {
    for (auto& x : data_) x = v;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Plain (non-differentiable) helpers shared by encoders, oracles and tests.
namespace lin {

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);
Tensor softmax_rows(const Tensor& a);
// v / max(|v|, eps) over all entries of v treated as one vector.
Tensor l2_normalize(const Tensor& v, double eps);
double norm(const Tensor& v);
double dot(const Tensor& a, const Tensor& b);
double cosine(const Tensor& a, const Tensor& b);
// Column-wise modified Gram-Schmidt; requires rows >= cols.
Tensor orthonormal_columns(std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace lin

}  // namespace zscir
