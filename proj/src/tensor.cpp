#include "zscir/tensor.hpp"

#include <cmath>
#include <stdexcept>

#include "zscir/errors.hpp"

namespace zscir {

Tensor Tensor::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Tensor t(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("from_rows: ragged initializer");
    std::size_t j = 0;
    for (double v : row) t.at(i, j++) = v;
    ++i;
  }
  return t;
}

std::string Tensor::shape_str() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

bool Tensor::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

double Tensor::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

namespace lin {

Tensor matmul(const Tensor& a, const Tensor& b) {
  if (a.cols() != b.rows())
    throw ShapeError("matmul: inner extents differ, " + a.shape_str() + " * " + b.shape_str());
  Tensor c(a.rows(), b.cols());
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  for (std::size_t i = 0; i < n; ++i) {
    const double* arow = a.data() + i * k;
    double* crow = c.data() + i * m;
    for (std::size_t p = 0; p < k; ++p) {
      const double av = arow[p];
      if (av == 0.0) continue;
      const double* brow = b.data() + p * m;
      for (std::size_t j = 0; j < m; ++j) crow[j] += av * brow[j];
    }
  }
  return c;
}

Tensor transpose(const Tensor& a) {
  Tensor t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

Tensor softmax_rows(const Tensor& a) {
  Tensor out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double mx = -1e300;
    for (std::size_t j = 0; j < a.cols(); ++j) mx = std::max(mx, a.at(i, j));
    double sum = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      double e = std::exp(a.at(i, j) - mx);
      out.at(i, j) = e;
      sum += e;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) /= sum;
  }
  return out;
}

double norm(const Tensor& v) {
  double s = 0.0;
  for (double x : v.raw()) s += x * x;
  return std::sqrt(s);
}

Tensor l2_normalize(const Tensor& v, double eps) {
  if (eps <= 0.0) throw ContractError("l2_normalize: eps must be positive");
  double n = std::max(norm(v), eps);
  Tensor out = v;
  for (double& x : out.raw()) x /= n;
  return out;
}

double dot(const Tensor& a, const Tensor& b) {
  if (a.size() != b.size()) throw ShapeError("dot: sizes differ");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.raw()[i] * b.raw()[i];
  return s;
}

double cosine(const Tensor& a, const Tensor& b) {
  double na = norm(a), nb = norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot(a, b) / (na * nb);
}

Tensor orthonormal_columns(std::size_t rows, std::size_t cols, Rng& rng) {
  if (cols > rows) throw ConfigError("orthonormal_columns: need rows >= cols");
  Tensor m = Tensor::gaussian(rows, cols, rng);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t p = 0; p < j; ++p) {
      double d = 0.0;
      for (std::size_t i = 0; i < rows; ++i) d += m.at(i, j) * m.at(i, p);
      for (std::size_t i = 0; i < rows; ++i) m.at(i, j) -= d * m.at(i, p);
    }
    double n = 0.0;
    for (std::size_t i = 0; i < rows; ++i) n += m.at(i, j) * m.at(i, j);
    n = std::sqrt(n);
    if (n < 1e-12) throw DegenerateParameterError("orthonormal_columns: degenerate draw");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) /= n;
  }
  return m;
}

}  // namespace lin

}  // namespace zscir
