#include "mixnorm/extremal.hpp"

#include <cmath>
#include <stdexcept>

namespace mixnorm {

namespace {

std::size_t dense_cell_count(std::size_t m, std::size_t n) {
  std::size_t cells = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (cells > kDenseCellCap / n)
      throw std::length_error(
          "extremal: refusing dense tensor with more than " +
          std::to_string(kDenseCellCap) + " cells (m=" + std::to_string(m) +
          ", n=" + std::to_string(n) + "); use the closed forms");
    cells *= n;
  }
  return cells;
}

}  // namespace

NonNegTensor diagonal(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("diagonal: m, n >= 1");
  dense_cell_count(m, n);
  NonNegTensor::Builder b(std::vector<std::size_t>(m, n));
  // flat stride of moving all m indices together is 1 + n + ... + n^{m-1}
  std::size_t stride = 0, pw = 1;
  for (std::size_t k = 0; k < m; ++k) {
    stride += pw;
    pw *= n;
  }
  for (std::size_t j = 0; j < n; ++j) b[j * stride] = 1.0;
  return b.release();
}

NonNegTensor pinned_diagonal(std::size_t m, std::size_t n,
                             std::size_t pin_count, const Perm& sigma) {
  if (m < 1 || n < 1) throw std::invalid_argument("pinned_diagonal: m, n >= 1");
  if (pin_count >= m)
    throw std::invalid_argument("pinned_diagonal: pin_count must be < m");
  if (sigma.size() != m)
    throw std::invalid_argument("pinned_diagonal: sigma length mismatch");
  dense_cell_count(m, n);
  NonNegTensor::Builder b(std::vector<std::size_t>(m, n));
  std::vector<std::size_t> idx(m, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < pin_count; ++l) idx[sigma(l)] = 0;
    for (std::size_t l = pin_count; l < m; ++l) idx[sigma(l)] = j;
    b.set(idx, 1.0);
  }
  return b.release();
}

double diagonal_norm_closed_form(std::size_t n, const Spaces& p) {
  Rational s = reciprocal_sum(p.p);
  if (s >= Rational(BigInt(1))) return 1.0;
  double expo = ExtReal(Rational(BigInt(1)) - s).to_double();
  return std::pow(static_cast<double>(n), expo);
}

double pinned_norm_closed_form(std::size_t n, const Spaces& p,
                               std::size_t pin_count, const Perm& sigma) {
  if (pin_count >= p.size())
    throw std::invalid_argument("pinned_norm_closed_form: pin_count < m");
  if (sigma.size() != p.size())
    throw std::invalid_argument("pinned_norm_closed_form: sigma length mismatch");
  std::vector<ExtReal> tail;
  for (std::size_t l = pin_count; l < p.size(); ++l) tail.push_back(p.p[sigma(l)]);
  return diagonal_norm_closed_form(n, Spaces(std::move(tail)));
}

Reduction reduce(const NonNegTensor& d, const Spaces& p) {
  if (d.order() != p.size())
    throw std::invalid_argument("reduce: order/spaces mismatch");
  if (d.order() < 2) throw std::domain_error("reduce: need m >= 2");
  if (reciprocal_sum(p.p) >= Rational(BigInt(1)))
    throw std::domain_error("reduce: sum 1/p_k >= 1 (second-case input)");
  const double e = conjugate(p.p.back()).to_double();
  std::size_t row_len = d.shape().back();
  std::size_t rows = d.size() / row_len;
  std::vector<double> out(rows);
  const double* src = d.data().data();
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (std::size_t i = 0; i < row_len; ++i)
      sum += std::pow(src[r * row_len + i], e);
    out[r] = sum;
  }
  std::vector<std::size_t> shape(d.shape().begin(), d.shape().end() - 1);
  return {NonNegTensor(std::move(shape), std::move(out)), reduced_spaces(p)};
}

}  // namespace mixnorm
