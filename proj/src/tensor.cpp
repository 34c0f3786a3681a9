#include "mixnorm/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace mixnorm {

namespace {

std::size_t checked_cell_count(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) {
    if (d == 0) throw std::invalid_argument("NonNegTensor: zero axis length");
    if (d != 0 && n > SIZE_MAX / d)
      throw std::length_error("NonNegTensor: shape overflow");
    n *= d;
  }
  return n;
}

}  // namespace

NonNegTensor::NonNegTensor(std::vector<std::size_t> shape,
                           std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  std::size_t n = checked_cell_count(shape_);
  if (data_.size() != n)
    throw std::invalid_argument(
        "NonNegTensor: data length " + std::to_string(data_.size()) +
        " does not match shape product " + std::to_string(n));
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i]) || data_[i] < 0)
      throw std::invalid_argument(
          "NonNegTensor: entry at flat index " + std::to_string(i) +
          " is negative or non-finite");
  }
}

NonNegTensor NonNegTensor::zeros(std::vector<std::size_t> shape) {
  std::size_t n = checked_cell_count(shape);
  return NonNegTensor(std::move(shape), std::vector<double>(n, 0.0));
}

double NonNegTensor::at(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size())
    throw std::invalid_argument("NonNegTensor::at: index rank mismatch");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < shape_.size(); ++k) {
    if (index[k] >= shape_[k])
      throw std::out_of_range("NonNegTensor::at: index out of range");
    flat = flat * shape_[k] + index[k];
  }
  return data_[flat];
}

double NonNegTensor::scalar() const {
  if (data_.size() != 1)
    throw std::logic_error("NonNegTensor::scalar: tensor has more than one cell");
  return data_[0];
}

NonNegTensor NonNegTensor::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("data"))
    throw std::invalid_argument("tensor JSON: expected {\"shape\":[...],\"data\":[...]}");
  std::vector<std::size_t> shape;
  for (std::size_t k = 0; k < j["shape"].size(); ++k) {
    const auto& e = j["shape"][k];
    if (!e.is_number_unsigned() || e.get<std::size_t>() == 0)
      throw std::invalid_argument("tensor JSON: shape[" + std::to_string(k) +
                                  "] is not a positive integer");
    shape.push_back(e.get<std::size_t>());
  }
  std::vector<double> data;
  data.reserve(j["data"].size());
  for (std::size_t i = 0; i < j["data"].size(); ++i) {
    const auto& e = j["data"][i];
    if (!e.is_number())
      throw std::invalid_argument("tensor JSON: data[" + std::to_string(i) +
                                  "] is not a number");
    double v = e.get<double>();
    if (!std::isfinite(v) || v < 0)
      throw std::invalid_argument("tensor JSON: data[" + std::to_string(i) +
                                  "] is negative or non-finite");
    data.push_back(v);
  }
  std::size_t n = checked_cell_count(shape);
  if (data.size() != n)
    throw std::invalid_argument(
        "tensor JSON: data length " + std::to_string(data.size()) +
        " does not match shape product " + std::to_string(n));
  return NonNegTensor(std::move(shape), std::move(data));
}

NonNegTensor NonNegTensor::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tensor file: " + path);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

nlohmann::json NonNegTensor::to_json() const {
  return nlohmann::json{{"shape", shape_}, {"data", data_}};
}

NonNegTensor::Builder::Builder(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(checked_cell_count(shape_), 0.0) {}

void NonNegTensor::Builder::set(std::span<const std::size_t> index, double v) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < shape_.size(); ++k)
    flat = flat * shape_[k] + index[k];
  data_[flat] = v;
}

NonNegTensor NonNegTensor::Builder::release() {
  return NonNegTensor(std::move(shape_), std::move(data_));
}

NonNegTensor lq_reduce_last(const NonNegTensor& a, const ExtReal& q) {
  if (a.order() == 0)
    throw std::invalid_argument("lq_reduce_last: order-0 tensor");
  if (q.is_zero()) throw std::domain_error("lq_reduce_last: q must be > 0");
  std::size_t row_len = a.shape().back();
  std::size_t rows = a.size() / row_len;
  std::vector<double> out(rows);
  const double* src = a.data().data();
  if (q.is_inf()) {
    for (std::size_t r = 0; r < rows; ++r)
      out[r] = *std::max_element(src + r * row_len, src + (r + 1) * row_len);
  } else {
    const double qd = q.to_double();
    for (std::size_t r = 0; r < rows; ++r) {
      const double* row = src + r * row_len;
      double m = *std::max_element(row, row + row_len);
      if (m == 0.0) {
        out[r] = 0.0;
        continue;
      }
      // Factor out the max so x^q never leaves the representable range.
      double sum = 0.0;
      for (std::size_t i = 0; i < row_len; ++i)
        sum += std::pow(row[i] / m, qd);
      out[r] = m * std::pow(sum, 1.0 / qd);
    }
  }
  std::vector<std::size_t> shape(a.shape().begin(), a.shape().end() - 1);
  return NonNegTensor(std::move(shape), std::move(out));
}

double mixed_norm(const NonNegTensor& a, const MixedNormSpec& spec) {
  if (spec.sigma.size() != a.order() || spec.q.size() != a.order())
    throw std::invalid_argument("mixed_norm: spec length mismatch");
  NonNegTensor b = spec.sigma.is_identity() ? a : permute_axes(a, spec.sigma);
  for (std::size_t k = a.order(); k-- > 0;)
    b = lq_reduce_last(b, spec.q.q[k]);
  return b.scalar();
}

NonNegTensor contract(const NonNegTensor& a, std::size_t slot,
                      std::span<const double> x) {
  if (slot >= a.order()) throw std::invalid_argument("contract: bad slot");
  if (x.size() != a.shape()[slot])
    throw std::invalid_argument("contract: vector length mismatch");
  for (double v : x)
    if (!std::isfinite(v) || v < 0)
      throw std::invalid_argument("contract: vector must be non-negative");
  std::size_t pre = 1, post = 1;
  for (std::size_t k = 0; k < slot; ++k) pre *= a.shape()[k];
  for (std::size_t k = slot + 1; k < a.order(); ++k) post *= a.shape()[k];
  std::size_t dim = a.shape()[slot];
  std::vector<double> out(pre * post, 0.0);
  const double* src = a.data().data();
  for (std::size_t i = 0; i < pre; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const double xj = x[j];
      if (xj == 0.0) continue;
      const double* block = src + (i * dim + j) * post;
      double* dst = out.data() + i * post;
      for (std::size_t t = 0; t < post; ++t) dst[t] += block[t] * xj;
    }
  std::vector<std::size_t> shape;
  shape.reserve(a.order() - 1);
  for (std::size_t k = 0; k < a.order(); ++k)
    if (k != slot) shape.push_back(a.shape()[k]);
  return NonNegTensor(std::move(shape), std::move(out));
}

NonNegTensor permute_axes(const NonNegTensor& a, const Perm& sigma) {
  if (sigma.size() != a.order())
    throw std::invalid_argument("permute_axes: length mismatch");
  if (sigma.is_identity()) return a;
  const std::size_t m = a.order();
  std::vector<std::size_t> shape(m);
  for (std::size_t k = 0; k < m; ++k) shape[k] = a.shape()[sigma(k)];
  std::vector<std::size_t> in_strides(m, 1);
  for (std::size_t k = m - 1; k-- > 0;)
    in_strides[k] = in_strides[k + 1] * a.shape()[k + 1];
  std::vector<double> out(a.size());
  std::vector<std::size_t> v(m, 0);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    std::size_t in_flat = 0;
    for (std::size_t k = 0; k < m; ++k) in_flat += v[k] * in_strides[sigma(k)];
    out[flat] = a.data()[in_flat];
    for (std::size_t k = m; k-- > 0;) {
      if (++v[k] < shape[k]) break;
      v[k] = 0;
    }
  }
  return NonNegTensor(std::move(shape), std::move(out));
}

double evaluate(const NonNegTensor& a,
                std::span<const std::vector<double>> witnesses) {
  if (witnesses.size() != a.order())
    throw std::invalid_argument("evaluate: witness count mismatch");
  NonNegTensor t = a;
  for (std::size_t k = a.order(); k-- > 0;)
    t = contract(t, k, witnesses[k]);
  return t.scalar();
}

}  // namespace mixnorm
