#include <doctest.h>

#include <random>

#include "mixnorm/exponents.hpp"

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

// Random rational tuple with sum 1/p < 1: each p_i drawn in [2m, 16m].
Spaces random_first_case(std::mt19937_64& rng, std::size_t m) {
  std::uniform_int_distribution<long long> den(1, 12);
  std::vector<ExtReal> p;
  for (std::size_t i = 0; i < m; ++i) {
    long long b = den(rng);
    std::uniform_int_distribution<long long> num(2 * m * b, 16 * m * b);
    p.emplace_back(num(rng), b);
  }
  return Spaces(std::move(p));
}

}  // namespace

TEST_CASE("conjugate") {
  CHECK(conjugate(E("2")) == E("2"));
  CHECK(conjugate(E("1")).is_inf());
  CHECK(conjugate(E("inf")) == E("1"));
  CHECK(conjugate(E("4")) == E("4/3"));
  CHECK_THROWS_AS(conjugate(E("1/2")), std::domain_error);
}

TEST_CASE("delta") {
  CHECK(delta(spaces({"2", "2"}).p).is_inf());
  CHECK(delta(spaces({"4", "4"}).p) == E("2"));
  CHECK(delta(spaces({"inf"}).p) == E("1"));
  CHECK(delta(spaces({"4"}).p) == E("4/3"));
  CHECK_THROWS_AS(delta(std::span<const ExtReal>{}), std::invalid_argument);
}

TEST_CASE("delta of a singleton is the conjugate") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> den(1, 50);
  for (int i = 0; i < 200; ++i) {
    long long b = den(rng);
    std::uniform_int_distribution<long long> num(b, 50 * b);
    ExtReal p(num(rng), b);
    std::vector<ExtReal> single{p};
    CHECK(delta(single) == conjugate(p));
  }
  std::vector<ExtReal> single{E("inf")};
  CHECK(delta(single) == conjugate(E("inf")));
}

TEST_CASE("critical_exponents") {
  auto q = critical_exponents(spaces({"4", "4", "4"}), Perm::identity(3));
  CHECK(q.q == std::vector<ExtReal>{E("4"), E("2"), E("4/3")});

  auto q2 = critical_exponents(spaces({"2", "2"}), Perm::identity(2));
  CHECK(q2.q[0].is_inf());
  CHECK(q2.q[1] == E("2"));

  auto q3 = critical_exponents(spaces({"inf"}), Perm::identity(1));
  CHECK(q3.q == std::vector<ExtReal>{E("1")});

  CHECK_THROWS_AS(critical_exponents(spaces({"4", "4"}), Perm::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("critical tuple is nonincreasing in k") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    Spaces p = random_first_case(rng, 1 + i % 5);
    auto q = critical_exponents(p, Perm::identity(p.size()));
    for (std::size_t k = 1; k < q.size(); ++k) CHECK(q.q[k - 1] >= q.q[k]);
  }
}

TEST_CASE("admissible") {
  auto a = admissible(spaces({"4", "4"}), Perm::identity(2), exps({"2", "2"}));
  CHECK(a.ok);
  CHECK(!a.failing_k);

  auto b = admissible(spaces({"4", "4"}), Perm::identity(2), exps({"2", "1"}));
  CHECK(!b.ok);
  CHECK(*b.failing_k == 2);

  // finite q never dominates an infinite delta
  auto c = admissible(spaces({"2", "2"}), Perm::identity(2), exps({"100", "2"}));
  CHECK(!c.ok);
  CHECK(*c.failing_k == 1);
}

TEST_CASE("critical tuple is the admissibility boundary") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    // mix of first- and second-case tuples
    Spaces p = i % 3 == 0 ? spaces({"2", "2", "3", "2"})
                          : random_first_case(rng, 1 + i % 4);
    Perm sigma = i % 2 ? Perm::reversal(p.size()) : Perm::identity(p.size());
    auto q = critical_exponents(p, sigma);
    CHECK(admissible(p, sigma, q).ok);
    for (std::size_t k = 0; k < q.size(); ++k) {
      auto bumped = q.q;
      if (bumped[k].is_inf()) {
        bumped[k] = ExtReal(1000000);  // any finite value fails against inf
      } else {
        bumped[k] = ExtReal(bumped[k].rat() * Rational(BigInt(99), BigInt(100)));
      }
      auto res = admissible(p, sigma, Exponents(bumped));
      CHECK(!res.ok);
      CHECK(*res.failing_k == k + 1);
    }
  }
}

TEST_CASE("exponents in (0,1) are legal inputs that fail admissibility") {
  auto r = admissible(spaces({"4", "4"}), Perm::identity(2), exps({"2", "1/2"}));
  CHECK(!r.ok);
  CHECK(*r.failing_k == 2);
}

TEST_CASE("i0_index") {
  CHECK(*i0_index(spaces({"2", "2", "4"})) == 2);
  CHECK(*i0_index(spaces({"4", "4"})) == 1);
  CHECK(!i0_index(spaces({"2", "1"})));
  CHECK(!i0_index(spaces({"1"})));
}

TEST_CASE("reduced_spaces") {
  CHECK(reduced_spaces(spaces({"8", "8", "2"})).p ==
        std::vector<ExtReal>{E("4"), E("4")});
  CHECK(reduced_spaces(spaces({"4", "inf"})).p == std::vector<ExtReal>{E("4")});
  // r_1 = 4 / (4/3) = 3 by the defining formula
  CHECK(reduced_spaces(spaces({"4", "4"})).p == std::vector<ExtReal>{E("3")});
  CHECK_THROWS_AS(reduced_spaces(spaces({"2", "2"})), std::domain_error);
  CHECK_THROWS_AS(reduced_spaces(spaces({"4"})), std::domain_error);
}

TEST_CASE("reduction identity for delta holds exactly in rational arithmetic") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    std::size_t m = 2 + i % 4;
    Spaces p = random_first_case(rng, m);
    Spaces r = reduced_spaces(p);
    CHECK(reciprocal_sum(r.p) < Rational(BigInt(1)));
    ExtReal dm = delta(std::span<const ExtReal>(&p.p.back(), 1));
    for (std::size_t i0 = 0; i0 + 1 < m; ++i0) {
      std::span<const ExtReal> rs(r.p.data() + i0, r.size() - i0);
      std::span<const ExtReal> ps(p.p.data() + i0, p.size() - i0);
      CHECK(delta(rs) == delta(ps) / dm);
    }
  }
}

TEST_CASE("isotropic recovery") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    Spaces p = random_first_case(rng, 1 + i % 5);
    Perm id = Perm::identity(p.size());
    ExtReal d = delta(p.p);
    std::uniform_int_distribution<long long> num(1, 200), den(1, 20);
    ExtReal rho(num(rng), den(rng));
    Exponents iso(std::vector<ExtReal>(p.size(), rho));
    CHECK(admissible(p, id, iso).ok == (rho >= d));
  }
}

TEST_CASE("perm validation") {
  CHECK_THROWS_AS(Perm({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_one_based({0, 1}), std::invalid_argument);
  CHECK(Perm::from_one_based({2, 1}).indices() ==
        std::vector<std::size_t>{1, 0});
  CHECK(Perm::reversal(3).indices() == std::vector<std::size_t>{2, 1, 0});
}
