#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mixnorm/harness.hpp"

using namespace mixnorm;

namespace {

ExtReal E(const char* s) { return ExtReal::parse(s); }

Spaces spaces(std::initializer_list<const char*> vals) {
  std::vector<ExtReal> v;
  for (const char* s : vals) v.push_back(E(s));
  return Spaces(std::move(v));
}

Exponents exps(std::initializer_list<const char*> vals) {
  std::vector<ExtReal> v;
  for (const char* s : vals) v.push_back(E(s));
  return Exponents(std::move(v));
}

}  // namespace

TEST_CASE("verify_random at the critical tuple") {
  Spaces p = spaces({"4", "4"});
  Perm id = Perm::identity(2);
  VerifyOptions opts;
  opts.trials = 40;
  opts.max_dim = 5;
  opts.seed = 42;
  auto report = verify_random(p, id, critical_exponents(p, id), opts);
  CHECK(report.trials == 40);
  CHECK(report.holds + report.inconclusive + report.violated == report.trials);
  CHECK(report.violated == 0);
  CHECK(report.worst_ratio <= 1.0 + 1e-9);
}

TEST_CASE("verify_random handles q1 = inf and heavy tails") {
  Spaces p = spaces({"2", "2"});
  Perm id = Perm::identity(2);
  VerifyOptions opts;
  opts.trials = 25;
  opts.max_dim = 4;
  opts.seed = 7;
  opts.tail = TailKind::pareto;
  auto report = verify_random(p, id, exps({"inf", "2"}), opts);
  CHECK(report.violated == 0);
}

TEST_CASE("verify_random rejects inadmissible tuples") {
  CHECK_THROWS_WITH_AS(
      verify_random(spaces({"4", "4"}), Perm::identity(2), exps({"2", "1"}),
                    VerifyOptions{}),
      doctest::Contains("falsify"), std::domain_error);
}

TEST_CASE("falsify examples") {
  std::vector<std::size_t> ns{16, 64, 256, 1024};
  auto res = falsify(spaces({"2", "2"}), Perm::identity(2), exps({"10", "2"}), ns);
  CHECK(res.failing_k == 1);
  CHECK(res.rows.back().norm == doctest::Approx(1.0));
  CHECK(res.rows.back().ratio == doctest::Approx(2.0).epsilon(1e-12));
  for (std::size_t i = 1; i < res.rows.size(); ++i)
    CHECK(res.rows[i].ratio > res.rows[i - 1].ratio);

  auto res2 = falsify(spaces({"4", "4"}), Perm::identity(2),
                      exps({"1.9", "4/3"}), ns);
  CHECK(res2.failing_k == 1);
  for (const auto& row : res2.rows)
    CHECK(row.ratio ==
          doctest::Approx(std::pow(row.n, 1.0 / 1.9 - 0.5)).epsilon(1e-12));

  auto res3 = falsify(spaces({"2", "2", "4"}), Perm::identity(3),
                      exps({"inf", "3", "4/3"}), ns);
  CHECK(res3.failing_k == 2);
  for (const auto& row : res3.rows)
    CHECK(row.ratio ==
          doctest::Approx(std::pow(row.n, 1.0 / 3 - 0.25)).epsilon(1e-9));
}

TEST_CASE("falsify rejects admissible tuples") {
  CHECK_THROWS_WITH_AS(
      falsify(spaces({"4", "4"}), Perm::identity(2), exps({"2", "2"}),
              std::vector<std::size_t>{4}),
      doctest::Contains("verify_random"), std::domain_error);
}

TEST_CASE("sharpness at criticality") {
  std::vector<std::size_t> ns{1, 10, 100, 1000, 10000};
  auto rows = sharpness_experiment(spaces({"4", "4"}), Perm::identity(2), ns);
  for (const auto& row : rows) CHECK(row.ratio == doctest::Approx(1.0).epsilon(1e-12));

  auto rows3 = sharpness_experiment(spaces({"4", "4", "4"}), Perm::identity(3),
                                    std::vector<std::size_t>{16});
  CHECK(rows3[0].lhs == doctest::Approx(2.0));
  CHECK(rows3[0].norm == doctest::Approx(2.0));

  auto rowsi = sharpness_experiment(spaces({"inf", "inf"}), Perm::identity(2),
                                    std::vector<std::size_t>{7});
  CHECK(rowsi[0].lhs == doctest::Approx(7.0));
  CHECK(rowsi[0].norm == doctest::Approx(7.0));

  CHECK_THROWS_AS(sharpness_experiment(spaces({"2", "2"}), Perm::identity(2), ns),
                  std::domain_error);
}

TEST_CASE("bayart_check") {
  CHECK(bayart_check(spaces({"4", "4", "4"}), E("4")));
  CHECK(!bayart_check(spaces({"4", "4", "4"}), ExtReal(399, 100)));
  CHECK(bayart_check(spaces({"2", "4"}), E("inf")));
  CHECK_THROWS_AS(bayart_check(spaces({"2", "2"}), E("3")), std::domain_error);
}

TEST_CASE("csv output") {
  std::vector<SharpnessRow> rows{{4, 2.0, 1.0, 2.0}};
  std::ostringstream out;
  write_csv(out, rows);
  CHECK(out.str() == "n,lhs,norm,ratio\n4,2,1,2\n");

  Spaces p = spaces({"4", "4"});
  Perm id = Perm::identity(2);
  VerifyOptions opts;
  opts.trials = 3;
  opts.seed = 5;
  auto report = verify_random(p, id, critical_exponents(p, id), opts);
  std::ostringstream rep;
  write_csv(rep, report);
  std::string s = rep.str();
  CHECK(s.rfind("seed,dims,lhs,estimate,verdict\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 4);
  CHECK(s.find("HOLDS") != std::string::npos);
}

TEST_CASE("determinism: same seed, same report") {
  Spaces p = spaces({"4", "4"});
  Perm id = Perm::identity(2);
  VerifyOptions opts;
  opts.trials = 8;
  opts.seed = 99;
  auto a = verify_random(p, id, critical_exponents(p, id), opts);
  auto b = verify_random(p, id, critical_exponents(p, id), opts);
  std::ostringstream sa, sb;
  write_csv(sa, a);
  write_csv(sb, b);
  CHECK(sa.str() == sb.str());
}
