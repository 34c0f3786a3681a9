#include "mixnorm/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

#include "mixnorm/rng.hpp"

namespace mixnorm {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "HOLDS";
    case Verdict::violated_candidate: return "VIOLATED-CANDIDATE";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

constexpr double kHoldsSlack = 1e-9;

NonNegTensor random_tensor(std::mt19937_64& rng, std::size_t m,
                           std::size_t max_dim, TailKind tail,
                           std::vector<std::size_t>& dims_out) {
  std::uniform_int_distribution<std::size_t> dim_dist(1, max_dim);
  std::vector<std::size_t> shape(m);
  for (auto& d : shape) d = dim_dist(rng);
  dims_out = shape;
  std::size_t cells = 1;
  for (std::size_t d : shape) cells *= d;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> data(cells);
  if (tail == TailKind::uniform) {
    for (auto& v : data) v = u(rng);
  } else {
    // Pareto with alpha = 3/2: heavy tails stress the estimator.
    for (auto& v : data) v = std::pow(1.0 - u(rng), -2.0 / 3.0) - 1.0;
  }
  return NonNegTensor(std::move(shape), std::move(data));
}

}  // namespace

VerifyReport verify_random(const Spaces& p, const Perm& sigma,
                           const Exponents& q, const VerifyOptions& opts) {
  auto adm = admissible(p, sigma, q);
  if (!adm.ok)
    throw std::domain_error(
        "verify_random: exponents are inadmissible (failing slot k=" +
        std::to_string(*adm.failing_k) + "); use falsify");
  if (opts.trials < 1) throw std::invalid_argument("verify_random: trials >= 1");

  VerifyReport report;
  report.trials = opts.trials;
  for (int t = 0; t < opts.trials; ++t) {
    std::uint64_t trial_seed = splitmix64(opts.seed ^ (0x7157a1ULL + t));
    std::mt19937_64 rng(trial_seed);
    std::vector<std::size_t> dims;
    NonNegTensor a = random_tensor(rng, p.size(), opts.max_dim, opts.tail, dims);
    double lhs = mixed_norm(a, {sigma, q});

    AscentOptions ao{opts.restarts, opts.tol, 1000, trial_seed};
    NormEstimate est = alternating_ascent(a, p, ao);
    bool ok = lhs <= est.value * (1.0 + kHoldsSlack);
    if (!ok || !est.converged) {
      AscentOptions escalated{opts.restarts * 4, opts.tol, 1000, trial_seed};
      est = alternating_ascent(a, p, escalated);
      ok = lhs <= est.value * (1.0 + kHoldsSlack);
    }
    Verdict verdict;
    if (!est.converged)
      verdict = Verdict::inconclusive;
    else if (ok)
      verdict = Verdict::holds;
    else
      verdict = Verdict::violated_candidate;

    double ratio = est.value > 0 ? lhs / est.value
                   : (lhs > 0 ? std::numeric_limits<double>::infinity() : 0.0);
    report.worst_ratio = std::max(report.worst_ratio, ratio);
    switch (verdict) {
      case Verdict::holds: ++report.holds; break;
      case Verdict::violated_candidate: ++report.violated; break;
      case Verdict::inconclusive: ++report.inconclusive; break;
    }
    report.records.push_back({trial_seed, dims, lhs, est.value, verdict});
  }
  std::sort(report.records.begin(), report.records.end(),
            [](const TrialRecord& a, const TrialRecord& b) {
              return a.seed < b.seed;
            });
  return report;
}

FalsifyResult falsify(const Spaces& p, const Perm& sigma, const Exponents& q,
                      std::span<const std::size_t> n_list) {
  auto adm = admissible(p, sigma, q);
  if (adm.ok)
    throw std::domain_error(
        "falsify: exponents are admissible; use verify_random");
  const std::size_t k = *adm.failing_k;  // 1-based; q_k is finite here
  const double inv_qk = q.q[k - 1].reciprocal().to_double();

  FalsifyResult result;
  result.failing_k = k;
  for (std::size_t n : n_list) {
    SharpnessRow row;
    row.n = n;
    row.lhs = std::pow(static_cast<double>(n), inv_qk);
    row.norm = pinned_norm_closed_form(n, p, k - 1, sigma);
    row.ratio = row.lhs / row.norm;
    if (n <= 64) {
      // cross-check the closed-form lhs against a dense evaluation
      NonNegTensor fam = pinned_diagonal(p.size(), n, k - 1, sigma);
      double numeric = mixed_norm(fam, {sigma, q});
      if (std::abs(numeric - row.lhs) > 1e-6 * std::max(1.0, row.lhs))
        throw std::logic_error("falsify: closed form disagrees with dense "
                               "evaluation at n=" + std::to_string(n));
    }
    result.rows.push_back(row);
  }
  return result;
}

std::vector<SharpnessRow> sharpness_experiment(const Spaces& p,
                                               const Perm& sigma,
                                               std::span<const std::size_t> n_list) {
  if (sigma.size() != p.size())
    throw std::invalid_argument("sharpness_experiment: length mismatch");
  if (reciprocal_sum(p.p) >= Rational(BigInt(1)))
    throw std::domain_error(
        "sharpness_experiment: sum 1/p >= 1; use falsify with finite q_1");
  Exponents q = critical_exponents(p, sigma);
  const double inv_q1 = q.q[0].reciprocal().to_double();
  std::vector<SharpnessRow> rows;
  for (std::size_t n : n_list) {
    SharpnessRow row;
    row.n = n;
    row.lhs = std::pow(static_cast<double>(n), inv_q1);
    row.norm = diagonal_norm_closed_form(n, p);
    row.ratio = row.lhs / row.norm;
    rows.push_back(row);
  }
  return rows;
}

bool bayart_check(const Spaces& p, const ExtReal& rho) {
  if (reciprocal_sum(p.p) >= Rational(BigInt(1)))
    throw std::domain_error("bayart_check: requires sum 1/p < 1");
  Exponents q(std::vector<ExtReal>(p.size(), rho));
  return admissible(p, Perm::identity(p.size()), q).ok;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, std::span<const SharpnessRow> rows) {
  out << "n,lhs,norm,ratio\n";
  for (const auto& r : rows)
    out << r.n << ',' << format_double(r.lhs) << ',' << format_double(r.norm)
        << ',' << format_double(r.ratio) << '\n';
}

void write_csv(std::ostream& out, const VerifyReport& report) {
  out << "seed,dims,lhs,estimate,verdict\n";
  for (const auto& r : report.records) {
    out << r.seed << ',';
    for (std::size_t i = 0; i < r.dims.size(); ++i)
      out << (i ? "x" : "") << r.dims[i];
    out << ',' << format_double(r.lhs) << ',' << format_double(r.estimate)
        << ',' << to_string(r.verdict) << '\n';
  }
}

}  // namespace mixnorm
