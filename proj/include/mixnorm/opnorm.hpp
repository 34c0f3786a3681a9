#ifndef MIXNORM_OPNORM_HPP
#define MIXNORM_OPNORM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mixnorm/tensor.hpp"

namespace mixnorm {

struct NormEstimate {
  enum class Kind { exact, lower_bound };

  double value = 0.0;
  Kind kind = Kind::lower_bound;
  int iterations = 0;
  int restarts_used = 0;
  bool converged = false;
  std::vector<std::vector<double>> witness;
  std::uint64_t seed = 0;
  std::vector<double> objective_trace;  // per-update values of the best restart
};

struct DualArgmax {
  std::vector<double> x;
  double value = 0.0;
};

/// Maximizes sum c_j x_j over the non-negative l_p unit ball; the value is
/// the dual norm ||c||_{p*}. All-zero c returns value 0 with x = e_1.
/// p = 1 ties break to the lowest index.
DualArgmax holder_dual_argmax(std::span<const double> c, const ExtReal& p);

/// m = 1: the norm is exactly the dual norm of the coefficient vector.
NormEstimate exact_norm_m1(std::span<const double> c, const ExtReal& p);

struct AscentOptions {
  int restarts = 8;
  double tol = 1e-10;
  int max_iter = 1000;
  std::uint64_t seed = 0;
};

/// Block-coordinate ascent: each slot in round-robin is replaced by the
/// closed-form dual argmax against the contraction of the others. The
/// objective is nondecreasing per update. Returns the best restart; restart 0
/// starts from uniform positive vectors, the rest from seeded random ones.
/// Exact dispatch for m = 1, all p in {1, inf}, and the zero tensor;
/// otherwise the result is an explicit lower bound.
NormEstimate alternating_ascent(const NonNegTensor& a, const Spaces& p,
                                const AscentOptions& opts = {});

struct OracleResult {
  NormEstimate estimate;
  /// Additive bound: the true norm is at most value + bound. Infinite in the
  /// basis-only mode (resolution 0).
  double discretization_bound = 0.0;
};

/// Brute-force search over per-slot direction grids: all integer vectors in
/// {0..resolution}^n normalized to the l_p unit sphere (deduplicated by
/// direction). resolution 0 tries basis vectors only. For any unit x >= 0
/// the ceiling grid point u satisfies ||u||_p <= 1 + n^{1/p}/resolution, so
/// grid_max >= opt / prod_k (1 + n_k^{1/p_k}/resolution), which gives the
/// reported bound.
OracleResult grid_oracle(const NonNegTensor& a, const Spaces& p,
                         int resolution,
                         std::size_t eval_cap = 100'000'000);

}  // namespace mixnorm

#endif  // MIXNORM_OPNORM_HPP
