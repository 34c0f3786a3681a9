#include "mixnorm/opnorm.hpp"

#include <algorithm>
#include <cfloat>
#include <climits>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "mixnorm/rng.hpp"

namespace mixnorm {

namespace {

void check_nonneg_vector(std::span<const double> c) {
  for (double v : c)
    if (!std::isfinite(v) || v < 0)
      throw std::invalid_argument("expected a finite non-negative vector");
}

std::vector<double> basis_vector(std::size_t n, std::size_t j) {
  std::vector<double> x(n, 0.0);
  x[j] = 1.0;
  return x;
}

bool is_one_or_inf(const ExtReal& p) { return p == ExtReal(1) || p.is_inf(); }

/// Contraction of every slot except `keep`, at the current witnesses.
std::vector<double> contract_all_but(const NonNegTensor& a, std::size_t keep,
                                     const std::vector<std::vector<double>>& xs) {
  NonNegTensor t = a;
  // Contract descending so lower slot indices stay valid.
  for (std::size_t s = a.order(); s-- > 0;) {
    if (s == keep) continue;
    t = contract(t, s, xs[s]);
  }
  return t.data();
}

NormEstimate exact_one_inf_norm(const NonNegTensor& a, const Spaces& p) {
  const std::size_t m = a.order();
  NormEstimate est;
  est.kind = NormEstimate::Kind::exact;
  est.converged = true;
  est.witness.resize(m);
  NonNegTensor t = a;
  std::vector<std::size_t> one_slots;
  for (std::size_t s = m; s-- > 0;) {
    if (p.p[s].is_inf()) {
      est.witness[s].assign(a.shape()[s], 1.0);
      t = contract(t, s, est.witness[s]);
    } else {
      one_slots.push_back(s);  // collected in descending order
    }
  }
  std::reverse(one_slots.begin(), one_slots.end());
  // Remaining axes are the p = 1 slots; the optimum pins each at the argmax.
  auto it = std::max_element(t.data().begin(), t.data().end());
  std::size_t flat = static_cast<std::size_t>(it - t.data().begin());
  for (std::size_t k = one_slots.size(); k-- > 0;) {
    std::size_t dim = a.shape()[one_slots[k]];
    est.witness[one_slots[k]] = basis_vector(dim, flat % dim);
    flat /= dim;
  }
  est.value = evaluate(a, est.witness);
  return est;
}

}  // namespace

DualArgmax holder_dual_argmax(std::span<const double> c, const ExtReal& p) {
  check_nonneg_vector(c);
  if (c.empty()) throw std::invalid_argument("holder_dual_argmax: empty vector");
  if (p < ExtReal(1)) throw std::domain_error("holder_dual_argmax: p < 1");
  auto it = std::max_element(c.begin(), c.end());
  const double m = *it;
  if (m == 0.0) return {basis_vector(c.size(), 0), 0.0};
  if (p.is_inf()) {
    double sum = std::accumulate(c.begin(), c.end(), 0.0);
    return {std::vector<double>(c.size(), 1.0), sum};
  }
  if (p == ExtReal(1)) {
    // lowest-index tie break comes from max_element
    return {basis_vector(c.size(), static_cast<std::size_t>(it - c.begin())), m};
  }
  const double ps = conjugate(p).to_double();
  double sum = 0.0;
  for (double v : c) sum += std::pow(v / m, ps);
  const double value = m * std::pow(sum, 1.0 / ps);
  std::vector<double> x(c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    x[j] = std::pow(c[j] / value, ps - 1.0);
  return {std::move(x), value};
}

NormEstimate exact_norm_m1(std::span<const double> c, const ExtReal& p) {
  auto da = holder_dual_argmax(c, p);
  NormEstimate est;
  est.value = da.value;
  est.kind = NormEstimate::Kind::exact;
  est.converged = true;
  est.witness.push_back(std::move(da.x));
  return est;
}

NormEstimate alternating_ascent(const NonNegTensor& a, const Spaces& p,
                                const AscentOptions& opts) {
  if (p.size() != a.order())
    throw std::invalid_argument("alternating_ascent: order/spaces mismatch");
  if (opts.restarts < 1 || opts.max_iter < 1)
    throw std::invalid_argument("alternating_ascent: restarts, max_iter >= 1");
  const std::size_t m = a.order();

  if (std::all_of(a.data().begin(), a.data().end(),
                  [](double v) { return v == 0.0; })) {
    NormEstimate est;
    est.kind = NormEstimate::Kind::exact;
    est.converged = true;
    est.seed = opts.seed;
    for (std::size_t s = 0; s < m; ++s)
      est.witness.push_back(basis_vector(a.shape()[s], 0));
    return est;
  }
  if (m == 1) {
    NormEstimate est = exact_norm_m1(a.data(), p.p[0]);
    est.seed = opts.seed;
    return est;
  }
  if (std::all_of(p.p.begin(), p.p.end(), is_one_or_inf)) {
    NormEstimate est = exact_one_inf_norm(a, p);
    est.seed = opts.seed;
    return est;
  }

  NormEstimate best;
  best.value = -1.0;
  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<std::vector<double>> xs(m);
    if (r == 0) {
      for (std::size_t s = 0; s < m; ++s) {
        std::size_t n = a.shape()[s];
        double v = p.p[s].is_inf()
                       ? 1.0
                       : std::pow(static_cast<double>(n), -1.0 / p.p[s].to_double());
        xs[s].assign(n, v);
      }
    } else {
      std::mt19937_64 rng(splitmix64(opts.seed ^ (0x5eedULL * r)));
      std::uniform_real_distribution<double> u(0.01, 1.0);
      for (std::size_t s = 0; s < m; ++s) {
        std::size_t n = a.shape()[s];
        xs[s].resize(n);
        for (auto& v : xs[s]) v = u(rng);
        if (p.p[s].is_inf()) {
          double mx = *std::max_element(xs[s].begin(), xs[s].end());
          for (auto& v : xs[s]) v /= mx;
        } else {
          double pd = p.p[s].to_double();
          double nrm = 0.0;
          for (double v : xs[s]) nrm += std::pow(v, pd);
          nrm = std::pow(nrm, 1.0 / pd);
          for (auto& v : xs[s]) v /= nrm;
        }
      }
    }

    std::vector<double> trace;
    double cur = 0.0, prev = 0.0;
    bool converged = false;
    int iters = 0;
    for (int it = 1; it <= opts.max_iter; ++it) {
      for (std::size_t k = 0; k < m; ++k) {
        auto c = contract_all_but(a, k, xs);
        auto da = holder_dual_argmax(c, p.p[k]);
        xs[k] = std::move(da.x);
        cur = da.value;
        trace.push_back(cur);
      }
      iters = it;
      if (cur - prev <= opts.tol * std::max(cur, DBL_MIN)) {
        converged = true;
        break;
      }
      prev = cur;
    }
    double value = evaluate(a, xs);
    if (value > best.value) {
      best.value = value;
      best.witness = xs;
      best.iterations = iters;
      best.converged = converged;
      best.objective_trace = std::move(trace);
    }
  }
  best.kind = NormEstimate::Kind::lower_bound;
  best.restarts_used = opts.restarts;
  best.seed = opts.seed;
  return best;
}

namespace {

std::vector<std::vector<double>> slot_directions(std::size_t n, const ExtReal& p,
                                                 int resolution) {
  std::vector<std::vector<double>> dirs;
  if (resolution <= 0) {
    for (std::size_t j = 0; j < n; ++j) dirs.push_back(basis_vector(n, j));
    return dirs;
  }
  double combos = std::pow(resolution + 1.0, static_cast<double>(n));
  if (combos > 1e8)
    throw std::length_error("grid_oracle: per-slot grid too large (" +
                            std::to_string(resolution) + "^" +
                            std::to_string(n) + " points)");
  std::vector<long long> u(n, 0);
  const double pd = p.is_inf() ? 0.0 : p.to_double();
  while (true) {
    // advance odometer
    std::size_t k = 0;
    while (k < n && u[k] == resolution) u[k++] = 0;
    if (k == n) break;
    ++u[k];
    long long g = 0;
    for (long long v : u) g = std::gcd(g, v);
    if (g != 1) continue;  // canonical representative per direction
    double norm;
    if (p.is_inf()) {
      norm = static_cast<double>(*std::max_element(u.begin(), u.end()));
    } else {
      double s = 0.0;
      for (long long v : u)
        if (v > 0) s += std::pow(static_cast<double>(v), pd);
      norm = std::pow(s, 1.0 / pd);
    }
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = static_cast<double>(u[j]) / norm;
    dirs.push_back(std::move(x));
  }
  return dirs;
}

struct GridSearch {
  const std::vector<std::vector<std::vector<double>>>& dirs;
  double best = -1.0;
  std::vector<std::size_t> best_idx;
  std::vector<std::size_t> cur_idx;
  std::size_t evals = 0;

  void run(const NonNegTensor& t, std::size_t slot) {
    if (slot == dirs.size()) {
      ++evals;
      double v = t.scalar();
      if (v > best) {
        best = v;
        best_idx = cur_idx;
      }
      return;
    }
    for (std::size_t i = 0; i < dirs[slot].size(); ++i) {
      cur_idx[slot] = i;
      run(contract(t, 0, dirs[slot][i]), slot + 1);
    }
  }
};

}  // namespace

OracleResult grid_oracle(const NonNegTensor& a, const Spaces& p, int resolution,
                         std::size_t eval_cap) {
  if (p.size() != a.order())
    throw std::invalid_argument("grid_oracle: order/spaces mismatch");
  const std::size_t m = a.order();
  std::vector<std::vector<std::vector<double>>> dirs;
  std::size_t total = 1;
  for (std::size_t s = 0; s < m; ++s) {
    dirs.push_back(slot_directions(a.shape()[s], p.p[s], resolution));
    if (total > eval_cap / dirs.back().size())
      throw std::length_error(
          "grid_oracle: grid of more than " + std::to_string(eval_cap) +
          " evaluations; lower the resolution (slot " + std::to_string(s + 1) +
          " alone has " + std::to_string(dirs.back().size()) + " directions)");
    total *= dirs.back().size();
  }

  GridSearch search{dirs};
  search.cur_idx.resize(m);
  search.run(a, 0);

  OracleResult res;
  res.estimate.value = search.best;
  res.estimate.kind = NormEstimate::Kind::lower_bound;
  res.estimate.converged = true;
  res.estimate.iterations =
      static_cast<int>(std::min<std::size_t>(search.evals, INT_MAX));
  for (std::size_t s = 0; s < m; ++s)
    res.estimate.witness.push_back(dirs[s][search.best_idx[s]]);
  if (resolution <= 0) {
    res.discretization_bound = std::numeric_limits<double>::infinity();
  } else {
    double factor = 1.0;
    for (std::size_t s = 0; s < m; ++s) {
      double np = p.p[s].is_inf()
                      ? 1.0
                      : std::pow(static_cast<double>(a.shape()[s]),
                                 1.0 / p.p[s].to_double());
      factor *= 1.0 + np / resolution;
    }
    res.discretization_bound = search.best * (factor - 1.0);
  }
  return res;
}

}  // namespace mixnorm
