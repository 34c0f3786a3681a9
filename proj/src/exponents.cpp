#include "mixnorm/exponents.hpp"

#include <algorithm>
#include <numeric>

namespace mixnorm {

Spaces::Spaces(std::vector<ExtReal> values) : p(std::move(values)) {
  if (p.empty()) throw std::invalid_argument("Spaces: empty tuple");
  for (const auto& pi : p)
    if (pi < ExtReal(1)) throw std::domain_error("Spaces: exponent < 1");
}

Exponents::Exponents(std::vector<ExtReal> values) : q(std::move(values)) {
  if (q.empty()) throw std::invalid_argument("Exponents: empty tuple");
  for (const auto& qi : q)
    if (qi.is_zero()) throw std::domain_error("Exponents: exponent must be > 0");
}

Perm::Perm(std::vector<std::size_t> zero_based) : idx_(std::move(zero_based)) {
  if (idx_.empty()) throw std::invalid_argument("Perm: empty");
  std::vector<bool> seen(idx_.size(), false);
  for (std::size_t i : idx_) {
    if (i >= idx_.size() || seen[i])
      throw std::invalid_argument("Perm: not a bijection");
    seen[i] = true;
  }
}

Perm Perm::identity(std::size_t m) {
  std::vector<std::size_t> v(m);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return Perm(std::move(v));
}

Perm Perm::reversal(std::size_t m) {
  std::vector<std::size_t> v(m);
  for (std::size_t k = 0; k < m; ++k) v[k] = m - 1 - k;
  return Perm(std::move(v));
}

Perm Perm::from_one_based(const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> v;
  v.reserve(idx.size());
  for (std::size_t i : idx) {
    if (i == 0) throw std::invalid_argument("Perm: indices are 1-based");
    v.push_back(i - 1);
  }
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<std::size_t> v(idx_.size());
  for (std::size_t k = 0; k < idx_.size(); ++k) v[idx_[k]] = k;
  return Perm(std::move(v));
}

bool Perm::is_identity() const {
  for (std::size_t k = 0; k < idx_.size(); ++k)
    if (idx_[k] != k) return false;
  return true;
}

ExtReal conjugate(const ExtReal& p) {
  if (p < ExtReal(1)) throw std::domain_error("conjugate: p < 1");
  if (p.is_inf()) return ExtReal(1);
  if (p == ExtReal(1)) return ExtReal::inf();
  return p / (p - ExtReal(1));
}

Rational reciprocal_sum(std::span<const ExtReal> s) {
  Rational sum(BigInt(0));
  for (const auto& si : s) {
    if (si < ExtReal(1)) throw std::domain_error("reciprocal_sum: exponent < 1");
    if (!si.is_inf()) sum += si.reciprocal().rat();
  }
  return sum;
}

ExtReal delta(std::span<const ExtReal> suffix) {
  if (suffix.empty()) throw std::invalid_argument("delta: empty tuple");
  Rational sum = reciprocal_sum(suffix);
  if (sum >= Rational(BigInt(1))) return ExtReal::inf();
  return ExtReal(Rational(BigInt(1)) / (Rational(BigInt(1)) - sum));
}

namespace {

std::vector<ExtReal> permuted_suffix(const Spaces& p, const Perm& sigma,
                                     std::size_t from) {
  std::vector<ExtReal> s;
  s.reserve(p.size() - from);
  for (std::size_t k = from; k < p.size(); ++k) s.push_back(p.p[sigma(k)]);
  return s;
}

}  // namespace

Exponents critical_exponents(const Spaces& p, const Perm& sigma) {
  if (sigma.size() != p.size())
    throw std::invalid_argument("critical_exponents: length mismatch");
  std::vector<ExtReal> q;
  q.reserve(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    auto suffix = permuted_suffix(p, sigma, k);
    q.push_back(delta(suffix));
  }
  return Exponents(std::move(q));
}

Admissibility admissible(const Spaces& p, const Perm& sigma,
                         const Exponents& q) {
  if (sigma.size() != p.size() || q.size() != p.size())
    throw std::invalid_argument("admissible: length mismatch");
  for (std::size_t k = 0; k < p.size(); ++k) {
    auto suffix = permuted_suffix(p, sigma, k);
    if (q.q[k] < delta(suffix)) return {false, k + 1};
  }
  return {true, std::nullopt};
}

std::optional<std::size_t> i0_index(const Spaces& p) {
  // Trailing sums are antitone in the start index; scan from the front.
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::span<const ExtReal> tail(p.p.data() + i, p.size() - i);
    if (reciprocal_sum(tail) < Rational(BigInt(1))) return i + 1;
  }
  return std::nullopt;
}

Spaces reduced_spaces(const Spaces& p) {
  if (p.size() < 2) throw std::domain_error("reduced_spaces: need m >= 2");
  if (reciprocal_sum(p.p) >= Rational(BigInt(1)))
    throw std::domain_error("reduced_spaces: sum 1/p_k >= 1");
  ExtReal d = conjugate(p.p.back());  // delta of the singleton (p_m)
  std::vector<ExtReal> r;
  r.reserve(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) r.push_back(p.p[i] / d);
  return Spaces(std::move(r));
}

}  // namespace mixnorm
