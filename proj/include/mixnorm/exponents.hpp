#ifndef MIXNORM_EXPONENTS_HPP
#define MIXNORM_EXPONENTS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mixnorm/ext_real.hpp"

namespace mixnorm {

/// Source-space exponents p_1,...,p_m, each in [1, inf].
struct Spaces {
  explicit Spaces(std::vector<ExtReal> values);

  std::size_t size() const { return p.size(); }

  std::vector<ExtReal> p;
};

/// Mixed-norm exponents q_1,...,q_m, each in (0, inf].
struct Exponents {
  explicit Exponents(std::vector<ExtReal> values);

  std::size_t size() const { return q.size(); }

  std::vector<ExtReal> q;
};

/// A bijection on {0,...,m-1}. CLI and serialization use 1-based indices;
/// everything in-process is 0-based.
class Perm {
 public:
  explicit Perm(std::vector<std::size_t> zero_based);

  static Perm identity(std::size_t m);
  static Perm reversal(std::size_t m);
  static Perm from_one_based(const std::vector<std::size_t>& idx);

  std::size_t operator()(std::size_t k) const { return idx_[k]; }
  std::size_t size() const { return idx_.size(); }
  const std::vector<std::size_t>& indices() const { return idx_; }
  Perm inverse() const;

  bool is_identity() const;

 private:
  std::vector<std::size_t> idx_;
};

/// Conjugate exponent: 1/p + 1/p* = 1, with 1* = inf and inf* = 1.
ExtReal conjugate(const ExtReal& p);

/// Sum of reciprocals of a tuple of exponents >= 1 (inf contributes 0).
Rational reciprocal_sum(std::span<const ExtReal> s);

/// Critical exponent of a suffix of spaces: 1/(1 - sum 1/s_i) when the sum
/// is < 1, otherwise inf.
ExtReal delta(std::span<const ExtReal> suffix);

/// Componentwise-minimal admissible tuple: q_k = delta of the k-th trailing
/// suffix of the sigma-permuted spaces.
Exponents critical_exponents(const Spaces& p, const Perm& sigma);

struct Admissibility {
  bool ok;
  std::optional<std::size_t> failing_k;  // 1-based, smallest failing slot
};

/// Checks q_k >= delta(suffix k) for every k. "q >= inf" means q == inf.
Admissibility admissible(const Spaces& p, const Perm& sigma,
                         const Exponents& q);

/// Smallest 1-based i with sum_{k=i..m} 1/p_k < 1, or absent if even the
/// last slot has 1/p_m >= 1.
std::optional<std::size_t> i0_index(const Spaces& p);

/// r_i = p_i / delta((p_m)) for i = 1..m-1. Requires sum 1/p_k < 1.
Spaces reduced_spaces(const Spaces& p);

}  // namespace mixnorm

#endif  // MIXNORM_EXPONENTS_HPP
