#include <doctest.h>

#include <random>

#include "ltf/arith.hpp"
#include "ltf/errors.hpp"
#include "ltf/smith.hpp"
#include "ltf/spancheck.hpp"
#include "helpers.hpp"

using namespace ltf;
using namespace ltf::test;

TEST_CASE("digit sum and w_q small values") {
  CHECK(digit_sum(5, 3) == 3);
  CHECK(wq(5, 3) == 1);
  CHECK(wq(0, 7) == 0);
  for (std::int64_t q : {2, 3, 4, 9}) {
    std::int64_t qk = 1;
    for (int k = 0; k < 6; ++k, qk *= q) CHECK(wq(qk, q) == (qk - 1) / (q - 1));
  }
}

TEST_CASE("w_q of an extension agrees with both formulas") {
  const auto spec = ram(3, 2);
  for (std::int64_t n = 0; n < 500; ++n) {
    std::int64_t floor_sum = 0;
    for (std::int64_t t = n / 3; t > 0; t /= 3) floor_sum += t;
    CHECK(w_q(spec, n) == floor_sum);
    CHECK(w_q(spec, n) == (n - s_q(spec, n)) / 2);
  }
  CHECK_THROWS_AS(w_q(spec, -1), ValidationError);
}

TEST_CASE("w_q is superadditive with equality exactly when digits do not carry") {
  std::mt19937_64 rng(11);
  for (std::int64_t q : {3, 4, 9}) {
    std::uniform_int_distribution<std::int64_t> part(0, 400);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<std::int64_t> ns(2 + trial % 3);
      std::int64_t total = 0, wsum = 0, ssum = 0;
      for (auto& n : ns) {
        n = part(rng);
        total += n;
        wsum += wq(n, q);
        ssum += digit_sum(n, q);
      }
      CHECK(wsum <= wq(total, q));
      CHECK((wsum == wq(total, q)) == (ssum == digit_sum(total, q)));
    }
  }
}

TEST_CASE("p-adic valuation of integers and rationals") {
  CHECK(vp(mpz_class(54), 3) == 3);
  CHECK(vp(mpq_class(1, 6), 3) == -1);
  CHECK(vp(mpq_class(-9, 2), 3) == 2);
  CHECK_THROWS(vp(mpz_class(0), 3));
}

TEST_CASE("factorial, binomial and checked powers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(checked_pow(3, 4) == 81);
  CHECK_THROWS_AS(checked_pow(10, 30), ValidationError);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("Smith invariants of small matrices") {
  CHECK(smith_invariants({{2, 4}, {6, 8}}) == std::vector<mpz_class>{2, 4});
  CHECK(smith_invariants({{3, 0}, {0, 9}}) == std::vector<mpz_class>{3, 9});
  CHECK(smith_invariants({{6, 0}, {0, 4}}) == std::vector<mpz_class>{2, 12});
  CHECK(smith_invariants({{0, 0}, {0, 0}}).empty());
}

TEST_CASE("Smith invariants preserve the determinant up to sign") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> e(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a(3, std::vector<mpz_class>(3));
    for (auto& row : a)
      for (auto& x : row) x = e(rng);
    const mpz_class det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                          a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                          a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    const auto inv = smith_invariants(a);
    if (det == 0) {
      CHECK(inv.size() < 3);
      continue;
    }
    mpz_class prod = 1;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      prod *= inv[i];
      if (i > 0) CHECK(inv[i] % inv[i - 1] == 0);
    }
    CHECK(prod == abs(det));
  }
}

TEST_CASE("row lattice membership") {
  const IntMatrix h = hermite_rows({{2, 0}, {0, 3}});
  CHECK(in_row_lattice(h, {4, 9}));
  CHECK_FALSE(in_row_lattice(h, {1, 0}));
}
