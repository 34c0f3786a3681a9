#include <doctest.h>

#include <cmath>
#include <random>

#include "mixnorm/extremal.hpp"
#include "mixnorm/opnorm.hpp"

using namespace mixnorm;

namespace {

ExtReal E(const char* s) { return ExtReal::parse(s); }

Spaces spaces(std::initializer_list<const char*> vals) {
  std::vector<ExtReal> v;
  for (const char* s : vals) v.push_back(E(s));
  return Spaces(std::move(v));
}

NonNegTensor random_tensor(std::mt19937_64& rng, std::vector<std::size_t> shape) {
  std::size_t n = 1;
  for (auto d : shape) n *= d;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> data(n);
  for (auto& v : data) v = u(rng);
  return NonNegTensor(std::move(shape), std::move(data));
}

}  // namespace

TEST_CASE("diagonal generator") {
  NonNegTensor eye = diagonal(2, 3);
  CHECK(eye.shape() == std::vector<std::size_t>{3, 3});
  CHECK(eye.data() == std::vector<double>{1, 0, 0, 0, 1, 0, 0, 0, 1});

  CHECK(diagonal(1, 4).data() == std::vector<double>{1, 1, 1, 1});

  NonNegTensor d3 = diagonal(3, 2);
  int nonzeros = 0;
  for (double v : d3.data()) nonzeros += v != 0;
  CHECK(nonzeros == 2);
  std::vector<std::size_t> i0{0, 0, 0}, i1{1, 1, 1};
  CHECK(d3.at(i0) == 1.0);
  CHECK(d3.at(i1) == 1.0);

  CHECK_THROWS_AS(diagonal(8, 100), std::length_error);
}

TEST_CASE("pinned_diagonal generator") {
  // single trailing slot: row 1 all ones, row 2 zero
  NonNegTensor a = pinned_diagonal(2, 2, 1, Perm::identity(2));
  CHECK(a.data() == std::vector<double>{1, 1, 0, 0});

  NonNegTensor b = pinned_diagonal(3, 2, 1, Perm::identity(3));
  std::vector<std::size_t> i000{0, 0, 0}, i011{0, 1, 1}, i001{0, 0, 1};
  CHECK(b.at(i000) == 1.0);
  CHECK(b.at(i011) == 1.0);
  CHECK(b.at(i001) == 0.0);
  int nonzeros = 0;
  for (double v : b.data()) nonzeros += v != 0;
  CHECK(nonzeros == 2);

  CHECK(pinned_diagonal(3, 4, 0, Perm::identity(3)).data() ==
        diagonal(3, 4).data());
  CHECK_THROWS_AS(pinned_diagonal(2, 2, 2, Perm::identity(2)),
                  std::invalid_argument);
}

TEST_CASE("diagonal norm closed form") {
  CHECK(diagonal_norm_closed_form(9, spaces({"4", "4"})) == doctest::Approx(3.0));
  CHECK(diagonal_norm_closed_form(7, spaces({"2", "2"})) == doctest::Approx(1.0));
  CHECK(diagonal_norm_closed_form(8, spaces({"4", "4", "4"})) ==
        doctest::Approx(std::pow(8.0, 0.25)));
}

TEST_CASE("closed forms agree with the grid oracle on small cases") {
  struct Case {
    std::size_t m, n;
    Spaces p;
  };
  const Case cases[] = {
      {2, 3, spaces({"4", "4"})},
      {2, 3, spaces({"2", "2"})},
      {2, 2, spaces({"3", "inf"})},
      {3, 2, spaces({"4", "4", "4"})},
  };
  for (const auto& c : cases) {
    NonNegTensor fam = diagonal(c.m, c.n);
    auto oracle = grid_oracle(fam, c.p, 8);
    double exact = diagonal_norm_closed_form(c.n, c.p);
    CHECK(oracle.estimate.value <= exact * (1 + 1e-9));
    CHECK(exact <= oracle.estimate.value + oracle.discretization_bound + 1e-9);
  }
  // pinned family closed form, checked the same way
  Spaces p = spaces({"2", "4", "4"});
  NonNegTensor fam = pinned_diagonal(3, 2, 1, Perm::identity(3));
  auto oracle = grid_oracle(fam, p, 8);
  double exact = pinned_norm_closed_form(2, p, 1, Perm::identity(3));
  CHECK(oracle.estimate.value <= exact * (1 + 1e-9));
  CHECK(exact <= oracle.estimate.value + oracle.discretization_bound + 1e-9);
}

TEST_CASE("reduce examples") {
  NonNegTensor eye({2, 2}, {1, 0, 0, 1});
  auto [a1, r1] = reduce(eye, spaces({"4", "2"}));
  CHECK(a1.data() == std::vector<double>{1, 1});
  CHECK(r1.p == std::vector<ExtReal>{E("2")});

  auto [a2, r2] = reduce(diagonal(3, 4), spaces({"8", "8", "2"}));
  CHECK(a2.shape() == std::vector<std::size_t>{4, 4});
  CHECK(a2.data() == diagonal(2, 4).data());
  CHECK(r2.p == std::vector<ExtReal>{E("4"), E("4")});

  NonNegTensor ones({2, 2}, {1, 1, 1, 1});
  auto [a3, r3] = reduce(ones, spaces({"4", "4"}));
  CHECK(a3.data() == std::vector<double>{2, 2});
  CHECK(r3.p == std::vector<ExtReal>{E("3")});

  CHECK_THROWS_AS(reduce(ones, spaces({"2", "2"})), std::domain_error);
}

TEST_CASE("chain identity under reduction") {
  std::mt19937_64 rng(71);
  Spaces p = spaces({"8", "8", "2"});
  double dm = conjugate(p.p.back()).to_double();
  for (int i = 0; i < 50; ++i) {
    NonNegTensor d = random_tensor(rng, {4, 4, 4});
    auto [a, r] = reduce(d, p);
    double lhs = std::pow(
        mixed_norm(d, {Perm::identity(3), critical_exponents(p, Perm::identity(3))}),
        dm);
    double rhs =
        mixed_norm(a, {Perm::identity(2), critical_exponents(r, Perm::identity(2))});
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
  // a second family of spaces, m = 2 -> m = 1
  Spaces p2 = spaces({"4", "4"});
  for (int i = 0; i < 50; ++i) {
    NonNegTensor d = random_tensor(rng, {5, 5});
    auto [a, r] = reduce(d, p2);
    double dm2 = conjugate(p2.p.back()).to_double();
    double lhs = std::pow(
        mixed_norm(d, {Perm::identity(2), critical_exponents(p2, Perm::identity(2))}),
        dm2);
    double rhs =
        mixed_norm(a, {Perm::identity(1), critical_exponents(r, Perm::identity(1))});
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("norm transfer under reduction") {
  std::mt19937_64 rng(73);
  Spaces p = spaces({"8", "8", "2"});
  double dm = conjugate(p.p.back()).to_double();
  for (int i = 0; i < 20; ++i) {
    NonNegTensor d = random_tensor(rng, {3, 3, 3});
    auto [a, r] = reduce(d, p);
    AscentOptions opts;
    opts.seed = 1000 + i;
    double ea = alternating_ascent(a, r, opts).value;
    double ed = alternating_ascent(d, p, opts).value;
    CHECK(ea <= std::pow(ed, dm) * 1.05);
  }
}

TEST_CASE("pinned mixed norm is n^(1/q_k)") {
  std::mt19937_64 rng(79);
  std::uniform_int_distribution<long long> num(1, 40), den(1, 8);
  for (int i = 0; i < 40; ++i) {
    std::size_t m = 2 + i % 2, n = 2 + i % 4;
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    Perm sigma(std::move(perm));
    std::size_t pin = i % m;  // pin_count = k-1, so slot k = pin+1
    NonNegTensor fam = pinned_diagonal(m, n, pin, sigma);
    std::vector<ExtReal> q;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t k = 0; k < m; ++k)
      q.push_back(u(rng) < 0.2 ? ExtReal::inf() : ExtReal(num(rng), den(rng)));
    double qk_inv =
        q[pin].is_inf() ? 0.0 : q[pin].reciprocal().to_double();
    double expected = std::pow(static_cast<double>(n), qk_inv);
    CHECK(mixed_norm(fam, {sigma, Exponents(q)}) ==
          doctest::Approx(expected).epsilon(1e-10));
  }
}
