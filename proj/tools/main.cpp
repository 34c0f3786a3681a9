// mixnorm CLI: exponent calculus, mixed norms, operator-norm estimates and
// the verification/falsification experiments, with reproducible output.
//
// Exit codes: 0 success, 2 validation error, 3 when `verify` records any
// VIOLATED-CANDIDATE (so CI can gate on it).

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mixnorm/harness.hpp"

using namespace mixnorm;

namespace {

std::vector<ExtReal> parse_list(const std::string& flag, const std::string& s) {
  std::vector<ExtReal> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(ExtReal::parse(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "bad exponent '" + item + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& flag,
                                     const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "bad size '" + item + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

Spaces parse_spaces(const std::string& flag, const std::string& s) {
  try {
    return Spaces(parse_list(flag, s));
  } catch (const CLI::ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

Exponents parse_exponents(const std::string& flag, const std::string& s) {
  try {
    return Exponents(parse_list(flag, s));
  } catch (const CLI::ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

Perm parse_sigma(const std::string& s, std::size_t m) {
  if (s.empty()) return Perm::identity(m);
  std::vector<std::size_t> idx;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      idx.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--sigma", "bad index '" + item + "'");
    }
  }
  try {
    Perm p = Perm::from_one_based(idx);
    if (p.size() != m)
      throw std::invalid_argument("length mismatch");
    return p;
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--sigma", e.what());
  }
}

// JSON forms: integers as numbers, other rationals as "a/b", inf as "inf".
std::string exponent_json(const ExtReal& e) {
  if (e.is_inf()) return "\"inf\"";
  if (e.is_integer()) return e.str();
  return "\"" + e.str() + "\"";
}

std::string exponents_json(const std::vector<ExtReal>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + exponent_json(v[i]);
  return s + "]";
}

std::string list_str(const std::vector<ExtReal>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HL_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

struct CommonArgs {
  std::string p_str, q_str, sigma_str, tensor_path, n_str, rho_str;
  std::string format = "csv";
  int trials = 100;
  std::size_t max_dim = 6;
  int restarts = 8;
  double tol = 1e-10;
  std::uint64_t seed = default_seed();
  std::string tail = "uniform";
};

void echo_config_csv(std::ostream& out,
                     const std::vector<std::pair<std::string, std::string>>& kv) {
  for (const auto& [k, v] : kv) out << "# " << k << "=" << v << "\n";
}

std::string config_json(
    const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string s = "{";
  for (std::size_t i = 0; i < kv.size(); ++i)
    s += (i ? ",\"" : "\"") + kv[i].first + "\":\"" + kv[i].second + "\"";
  return s + "}";
}

void print_scalar(const CommonArgs& args, const std::string& subcommand,
                  const std::vector<std::pair<std::string, std::string>>& cfg,
                  const std::string& plain, const std::string& json_value) {
  if (args.format == "json") {
    std::cout << "{\"command\":\"" << subcommand << "\",\"config\":"
              << config_json(cfg) << ",\"result\":" << json_value << "}\n";
  } else {
    std::cout << plain << "\n";
  }
}

int run(CommonArgs& args, const std::string& sub) {
  if (sub == "delta") {
    auto p = parse_spaces("--p", args.p_str);
    ExtReal d = delta(p.p);
    print_scalar(args, sub, {{"p", list_str(p.p)}}, d.str(), exponent_json(d));
    return 0;
  }
  if (sub == "critical") {
    auto p = parse_spaces("--p", args.p_str);
    Perm sigma = parse_sigma(args.sigma_str, p.size());
    auto q = critical_exponents(p, sigma);
    print_scalar(args, sub,
                 {{"p", list_str(p.p)}, {"sigma", args.sigma_str.empty() ? "id" : args.sigma_str}},
                 list_str(q.q), exponents_json(q.q));
    return 0;
  }
  if (sub == "admissible") {
    auto p = parse_spaces("--p", args.p_str);
    auto q = parse_exponents("--q", args.q_str);
    Perm sigma = parse_sigma(args.sigma_str, p.size());
    auto res = admissible(p, sigma, q);
    std::string plain =
        res.ok ? "true" : "false (k=" + std::to_string(*res.failing_k) + ")";
    std::string json = res.ok
        ? "{\"admissible\":true}"
        : "{\"admissible\":false,\"failing_k\":" + std::to_string(*res.failing_k) + "}";
    print_scalar(args, sub,
                 {{"p", list_str(p.p)}, {"q", list_str(q.q)},
                  {"sigma", args.sigma_str.empty() ? "id" : args.sigma_str}},
                 plain, json);
    return 0;
  }
  if (sub == "mixed-norm") {
    NonNegTensor a = NonNegTensor::load(args.tensor_path);
    auto q = parse_exponents("--q", args.q_str);
    Perm sigma = parse_sigma(args.sigma_str, a.order());
    double v = mixed_norm(a, {sigma, q});
    print_scalar(args, sub,
                 {{"tensor", args.tensor_path}, {"q", list_str(q.q)},
                  {"sigma", args.sigma_str.empty() ? "id" : args.sigma_str}},
                 format_double(v), format_double(v));
    return 0;
  }
  if (sub == "opnorm") {
    NonNegTensor a = NonNegTensor::load(args.tensor_path);
    auto p = parse_spaces("--p", args.p_str);
    AscentOptions opts{args.restarts, args.tol, 1000, args.seed};
    NormEstimate est = alternating_ascent(a, p, opts);
    std::string json =
        "{\"value\":" + format_double(est.value) +
        ",\"kind\":\"" +
        (est.kind == NormEstimate::Kind::exact ? "exact" : "lower_bound") +
        "\",\"iterations\":" + std::to_string(est.iterations) +
        ",\"restarts\":" + std::to_string(est.restarts_used) +
        ",\"converged\":" + (est.converged ? "true" : "false") +
        ",\"seed\":" + std::to_string(est.seed) + "}";
    print_scalar(args, sub,
                 {{"tensor", args.tensor_path}, {"p", list_str(p.p)},
                  {"restarts", std::to_string(args.restarts)},
                  {"seed", std::to_string(args.seed)}},
                 format_double(est.value), json);
    return 0;
  }
  if (sub == "reduce") {
    NonNegTensor d = NonNegTensor::load(args.tensor_path);
    auto p = parse_spaces("--p", args.p_str);
    auto [a, r] = reduce(d, p);
    std::string shape = "[", data = "[";
    for (std::size_t i = 0; i < a.shape().size(); ++i)
      shape += (i ? "," : "") + std::to_string(a.shape()[i]);
    for (std::size_t i = 0; i < a.data().size(); ++i)
      data += (i ? "," : "") + format_double(a.data()[i]);
    std::string cfg = config_json({{"tensor", args.tensor_path}, {"p", list_str(p.p)}});
    std::cout << "{\"command\":\"reduce\",\"config\":" << cfg
              << ",\"tensor\":{\"shape\":" << shape << "],\"data\":" << data
              << "]},\"r\":" << exponents_json(r.p) << "}\n";
    return 0;
  }
  if (sub == "sharpness" || sub == "falsify") {
    auto p = parse_spaces("--p", args.p_str);
    Perm sigma = parse_sigma(args.sigma_str, p.size());
    auto ns = parse_sizes("--n", args.n_str);
    std::vector<std::pair<std::string, std::string>> cfg{
        {"p", list_str(p.p)},
        {"sigma", args.sigma_str.empty() ? "id" : args.sigma_str},
        {"n", args.n_str}};
    std::vector<SharpnessRow> rows;
    std::size_t failing_k = 0;
    if (sub == "sharpness") {
      rows = sharpness_experiment(p, sigma, ns);
    } else {
      auto q = parse_exponents("--q", args.q_str);
      cfg.insert(cfg.begin() + 1, {"q", list_str(q.q)});
      auto res = falsify(p, sigma, q, ns);
      rows = std::move(res.rows);
      failing_k = res.failing_k;
    }
    if (args.format == "json") {
      std::string body = "[";
      for (std::size_t i = 0; i < rows.size(); ++i)
        body += std::string(i ? "," : "") + "{\"n\":" + std::to_string(rows[i].n) +
                ",\"lhs\":" + format_double(rows[i].lhs) +
                ",\"norm\":" + format_double(rows[i].norm) +
                ",\"ratio\":" + format_double(rows[i].ratio) + "}";
      body += "]";
      std::cout << "{\"command\":\"" << sub << "\",\"config\":" << config_json(cfg)
                << (failing_k ? ",\"failing_k\":" + std::to_string(failing_k) : "")
                << ",\"rows\":" << body << "}\n";
    } else {
      echo_config_csv(std::cout, cfg);
      if (failing_k) std::cout << "# failing_k=" << failing_k << "\n";
      write_csv(std::cout, rows);
    }
    return 0;
  }
  if (sub == "verify") {
    auto p = parse_spaces("--p", args.p_str);
    auto q = parse_exponents("--q", args.q_str);
    Perm sigma = parse_sigma(args.sigma_str, p.size());
    VerifyOptions opts;
    opts.trials = args.trials;
    opts.max_dim = args.max_dim;
    opts.seed = args.seed;
    opts.restarts = args.restarts;
    opts.tol = args.tol;
    if (args.tail == "pareto") opts.tail = TailKind::pareto;
    else if (args.tail != "uniform")
      throw CLI::ValidationError("--tail", "expected uniform or pareto");
    auto report = verify_random(p, sigma, q, opts);
    std::vector<std::pair<std::string, std::string>> cfg{
        {"p", list_str(p.p)}, {"q", list_str(q.q)},
        {"sigma", args.sigma_str.empty() ? "id" : args.sigma_str},
        {"trials", std::to_string(opts.trials)},
        {"max_dim", std::to_string(opts.max_dim)},
        {"seed", std::to_string(opts.seed)},
        {"restarts", std::to_string(opts.restarts)},
        {"tail", args.tail}};
    if (args.format == "json") {
      std::string recs = "[";
      for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& r = report.records[i];
        std::string dims = "[";
        for (std::size_t k = 0; k < r.dims.size(); ++k)
          dims += (k ? "," : "") + std::to_string(r.dims[k]);
        recs += std::string(i ? "," : "") + "{\"seed\":" + std::to_string(r.seed) +
                ",\"dims\":" + dims + "],\"lhs\":" + format_double(r.lhs) +
                ",\"estimate\":" + format_double(r.estimate) + ",\"verdict\":\"" +
                to_string(r.verdict) + "\"}";
      }
      recs += "]";
      std::cout << "{\"command\":\"verify\",\"config\":" << config_json(cfg)
                << ",\"trials\":" << report.trials
                << ",\"holds\":" << report.holds
                << ",\"inconclusive\":" << report.inconclusive
                << ",\"violated\":" << report.violated
                << ",\"worst_ratio\":" << format_double(report.worst_ratio)
                << ",\"records\":" << recs << "}\n";
    } else {
      echo_config_csv(std::cout, cfg);
      std::cout << "# holds=" << report.holds
                << " inconclusive=" << report.inconclusive
                << " violated=" << report.violated
                << " worst_ratio=" << format_double(report.worst_ratio) << "\n";
      write_csv(std::cout, report);
    }
    return report.violated > 0 ? 3 : 0;
  }
  if (sub == "bayart") {
    auto p = parse_spaces("--p", args.p_str);
    ExtReal rho;
    try {
      rho = ExtReal::parse(args.rho_str);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--rho", "bad exponent '" + args.rho_str + "'");
    }
    bool ok = bayart_check(p, rho);
    print_scalar(args, sub, {{"p", list_str(p.p)}, {"rho", rho.str()}},
                 ok ? "true" : "false", ok ? "true" : "false");
    return 0;
  }
  throw CLI::ValidationError("subcommand", "unknown subcommand " + sub);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixed-norm inequality toolkit for non-negative multilinear forms"};
  app.require_subcommand(1);
  CommonArgs args;

  auto add_common = [&](CLI::App* cmd, bool needs_p, bool needs_q, bool needs_tensor,
                        bool needs_n, bool needs_rho) {
    if (needs_p) cmd->add_option("--p", args.p_str, "exponents p (e.g. 4,4 or 2,inf)")->required();
    if (needs_q) cmd->add_option("--q", args.q_str, "exponents q")->required();
    if (needs_tensor)
      cmd->add_option("--tensor", args.tensor_path, "tensor JSON file")->required();
    if (needs_n) cmd->add_option("--n", args.n_str, "sizes n (e.g. 10,100,1000)")->required();
    if (needs_rho) cmd->add_option("--rho", args.rho_str, "isotropic exponent")->required();
    cmd->add_option("--sigma", args.sigma_str, "permutation, 1-based (default identity)");
    cmd->add_option("--format", args.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  add_common(app.add_subcommand("delta", "critical exponent of a tuple"), true, false, false, false, false);
  add_common(app.add_subcommand("critical", "componentwise-minimal admissible tuple"), true, false, false, false, false);
  add_common(app.add_subcommand("admissible", "check an exponent tuple"), true, true, false, false, false);
  add_common(app.add_subcommand("mixed-norm", "evaluate the anisotropic mixed norm"), false, true, true, false, false);
  auto* opn = app.add_subcommand("opnorm", "estimate the operator norm");
  add_common(opn, true, false, true, false, false);
  opn->add_option("--restarts", args.restarts, "ascent restarts");
  opn->add_option("--tol", args.tol, "relative convergence tolerance");
  opn->add_option("--seed", args.seed, "rng seed (default HL_SEED or 0)");
  add_common(app.add_subcommand("reduce", "collapse the last slot"), true, false, true, false, false);
  add_common(app.add_subcommand("sharpness", "diagonal family at critical exponents"), true, false, false, true, false);
  add_common(app.add_subcommand("falsify", "divergence for an inadmissible tuple"), true, true, false, true, false);
  auto* ver = app.add_subcommand("verify", "random sufficiency experiment");
  add_common(ver, true, true, false, false, false);
  ver->add_option("--trials", args.trials, "number of trials");
  ver->add_option("--max-dim", args.max_dim, "max axis length");
  ver->add_option("--seed", args.seed, "rng seed (default HL_SEED or 0)");
  ver->add_option("--restarts", args.restarts, "ascent restarts");
  ver->add_option("--tail", args.tail, "entry distribution: uniform or pareto");
  add_common(app.add_subcommand("bayart", "isotropic admissibility check"), true, false, false, false, true);

  try {
    app.parse(argc, argv);
    return run(args, app.get_subcommands().front()->get_name());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
