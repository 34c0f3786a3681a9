#ifndef MIXNORM_EXTREMAL_HPP
#define MIXNORM_EXTREMAL_HPP

#include <cstddef>
#include <utility>

#include "mixnorm/tensor.hpp"

namespace mixnorm {

/// Dense generators refuse to materialize above this many cells; the harness
/// switches to closed forms long before that.
inline constexpr std::size_t kDenseCellCap = 10'000'000;

/// Diagonal form: shape (n,...,n), entry 1 iff all indices coincide.
NonNegTensor diagonal(std::size_t m, std::size_t n);

/// Leading sigma-slots pinned at index 1, diagonal across the trailing
/// sigma-slots. pin_count = 0 reduces to diagonal(m, n).
NonNegTensor pinned_diagonal(std::size_t m, std::size_t n,
                             std::size_t pin_count, const Perm& sigma);

/// Exact operator norm of diagonal(m, n) on the l_{p_i} unit balls:
/// n^(1 - sum 1/p_k) when the sum is < 1, else 1.
double diagonal_norm_closed_form(std::size_t n, const Spaces& p);

/// Exact operator norm of the pinned family: pinning costs a factor <= 1 per
/// pinned slot (attained at e_1), so the norm is the diagonal closed form of
/// the trailing sigma-suffix of spaces.
double pinned_norm_closed_form(std::size_t n, const Spaces& p,
                               std::size_t pin_count, const Perm& sigma);

struct Reduction {
  NonNegTensor a;  // order m-1
  Spaces r;        // reduced spaces, r_i = p_i / delta((p_m))
};

/// Collapses the last axis: a = sum_{j_m} d^(delta((p_m))) entrywise.
/// Requires the first-case hypothesis sum 1/p_k < 1.
Reduction reduce(const NonNegTensor& d, const Spaces& p);

}  // namespace mixnorm

#endif  // MIXNORM_EXTREMAL_HPP
