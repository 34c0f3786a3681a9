#ifndef MIXNORM_TENSOR_HPP
#define MIXNORM_TENSOR_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mixnorm/exponents.hpp"

namespace mixnorm {

/// Finite m-way array of non-negative coefficients, row-major flat storage.
/// Immutable after construction. Order-0 tensors (a single scalar) appear as
/// intermediate results of axis reduction.
class NonNegTensor {
 public:
  NonNegTensor(std::vector<std::size_t> shape, std::vector<double> data);

  static NonNegTensor zeros(std::vector<std::size_t> shape);

  std::size_t order() const { return shape_.size(); }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t size() const { return data_.size(); }
  const std::vector<double>& data() const { return data_; }

  double at(std::span<const std::size_t> index) const;
  double scalar() const;  // value of an order-0 (or single-cell) tensor

  /// {"shape":[...],"data":[...]}; rejects negative entries and shape/data
  /// mismatches, naming the first offending index.
  static NonNegTensor from_json(const nlohmann::json& j);
  static NonNegTensor load(const std::string& path);
  nlohmann::json to_json() const;

  /// Builder used by the generators; validates on release().
  class Builder {
   public:
    explicit Builder(std::vector<std::size_t> shape);
    double& operator[](std::size_t flat) { return data_[flat]; }
    void set(std::span<const std::size_t> index, double v);
    NonNegTensor release();

   private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
  };

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

/// Nesting order plus exponent tuple for the anisotropic mixed norm:
/// axis sigma(1) is outermost under q_1, axis sigma(m) innermost under q_m.
struct MixedNormSpec {
  Perm sigma;
  Exponents q;
};

/// The nested norm (sum_{j_sigma(1)} ( ... (sum_{j_sigma(m)} a^{q_m})^{q_{m-1}/q_m}
/// ... )^{q_1/q_2})^{1/q_1}; an inf level is a supremum. Accumulation is
/// max-scaled so powers of large/small entries cannot overflow or underflow.
double mixed_norm(const NonNegTensor& a, const MixedNormSpec& spec);

/// l_q reduction of the last axis (q = inf is a max-reduction).
NonNegTensor lq_reduce_last(const NonNegTensor& a, const ExtReal& q);

/// Sums over `slot` (0-based) weighted by x: result = sum_j a[..,j,..] x_j.
NonNegTensor contract(const NonNegTensor& a, std::size_t slot,
                      std::span<const double> x);

/// b with b.shape[k] = a.shape[sigma(k)]; axis k of b is axis sigma(k) of a,
/// so mixed_norm(a, sigma, q) == mixed_norm(permute_axes(a, sigma), id, q).
NonNegTensor permute_axes(const NonNegTensor& a, const Perm& sigma);

/// Full contraction against one vector per slot.
double evaluate(const NonNegTensor& a,
                std::span<const std::vector<double>> witnesses);

}  // namespace mixnorm

#endif  // MIXNORM_TENSOR_HPP
