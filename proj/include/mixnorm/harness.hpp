#ifndef MIXNORM_HARNESS_HPP
#define MIXNORM_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mixnorm/extremal.hpp"
#include "mixnorm/opnorm.hpp"

namespace mixnorm {

enum class Verdict { holds, violated_candidate, inconclusive };
const char* to_string(Verdict v);

enum class TailKind { uniform, pareto };

struct TrialRecord {
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims;
  double lhs = 0.0;
  double estimate = 0.0;
  Verdict verdict = Verdict::holds;
};

struct VerifyReport {
  int trials = 0;
  int holds = 0;
  int inconclusive = 0;
  int violated = 0;
  double worst_ratio = 0.0;  // max over trials of lhs / estimate
  std::vector<TrialRecord> records;
};

struct VerifyOptions {
  int trials = 100;
  std::size_t max_dim = 6;
  std::uint64_t seed = 0;
  int restarts = 8;
  double tol = 1e-10;
  TailKind tail = TailKind::uniform;
};

/// Sufficiency direction on random non-negative tensors. Requires an
/// admissible (p, sigma, q). A trial HOLDS when lhs <= estimate*(1+1e-9);
/// otherwise restarts are escalated x4 once before recording
/// VIOLATED-CANDIDATE. An unconverged estimator yields INCONCLUSIVE, never
/// a silent HOLDS.
VerifyReport verify_random(const Spaces& p, const Perm& sigma,
                           const Exponents& q, const VerifyOptions& opts);

struct SharpnessRow {
  std::size_t n = 0;
  double lhs = 0.0;
  double norm = 0.0;
  double ratio = 0.0;
};

struct FalsifyResult {
  std::vector<SharpnessRow> rows;
  std::size_t failing_k = 0;  // 1-based
};

/// Necessity direction: for an inadmissible tuple with smallest failing slot
/// k, the pinned-diagonal family with pin_count = k-1 gives
/// lhs = n^{1/q_k} against the closed-form family norm; the ratio diverges.
/// Closed forms throughout, with a numeric cross-check for n <= 64.
FalsifyResult falsify(const Spaces& p, const Perm& sigma, const Exponents& q,
                      std::span<const std::size_t> n_list);

/// Diagonal family at the critical tuple; both sides are n^{1/delta}, so
/// every ratio is 1. Requires sum 1/p < 1.
std::vector<SharpnessRow> sharpness_experiment(const Spaces& p,
                                               const Perm& sigma,
                                               std::span<const std::size_t> n_list);

/// Isotropic recovery: admissibility of (rho,...,rho) for sum 1/p < 1,
/// equivalent to rho >= delta(p_1,...,p_m).
bool bayart_check(const Spaces& p, const ExtReal& rho);

/// %.17g, round-trip safe.
std::string format_double(double v);

void write_csv(std::ostream& out, std::span<const SharpnessRow> rows);
void write_csv(std::ostream& out, const VerifyReport& report);

}  // namespace mixnorm

#endif  // MIXNORM_HARNESS_HPP
