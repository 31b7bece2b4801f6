#include <doctest.h>

#include <random>

#include "ltf/arith.hpp"
#include "modring.hpp"

using namespace ltf;
using namespace ltf::detail;

namespace {

mpz_class random_below(gmp_randclass& g, const mpz_class& n) { return g.get_z_range(n); }

template <int L, bool Pow2>
void check_against_mpz(u64 p, unsigned m, unsigned seed) {
  ModPm<L, Pow2> R(p, m, 2);
  const mpz_class n = pow_mpz(static_cast<std::int64_t>(p), m);
  gmp_randclass g(gmp_randinit_default);
  g.seed(seed);
  for (int t = 0; t < 200; ++t) {
    const mpz_class x = random_below(g, n), y = random_below(g, n);
    const mpz_class u = random_below(g, n), w = random_below(g, n);
    const auto a = R.from_mpz(x), b = R.from_mpz(y);
    const auto c = R.from_mpz(u), d = R.from_mpz(w);
    CHECK(R.to_mpz(a) == x);
    typename ModPm<L, Pow2>::E r;
    R.add(r, a, b);
    CHECK(R.to_mpz(r) == (x + y) % n);
    R.sub(r, a, b);
    CHECK(R.to_mpz(r) == ((x - y) % n + n) % n);
    CHECK(R.to_mpz(R.mul(a, b)) == (x * y) % n);
    const typename ModPm<L, Pow2>::E* pa[2] = {&a, &c};
    const typename ModPm<L, Pow2>::E* pb[2] = {&b, &d};
    CHECK(R.to_mpz(R.template dot<2>(pa, pb)) == (x * y + u * w) % n);
    CHECK(R.to_mpz(R.neg(a)) == (n - x) % n);

    u64 plain[L];
    R.to_plain(a, plain);
    mpz_class back;
    mpz_import(back.get_mpz_t(), L, -1, sizeof(u64), 0, 0, plain);
    CHECK(back == x);
    CHECK(R.to_mpz(R.from_plain(plain)) == x);

    const unsigned v = x == 0 ? m : static_cast<unsigned>(vp(x, static_cast<std::int64_t>(p)));
    CHECK(R.vp(a) == v);
    if (v > 0 && v < m) {
      const unsigned k = 1 + t % v;
      const mpz_class q = x / pow_mpz(static_cast<std::int64_t>(p), k);
      const mpz_class nk = pow_mpz(static_cast<std::int64_t>(p), m - k);
      CHECK(R.to_mpz(R.div_p_pow(a, k)) % nk == q % nk);
    }
    const unsigned k = t % (m + 2);
    CHECK(R.to_mpz(R.mul_p_pow(a, k)) == (x * pow_mpz(static_cast<std::int64_t>(p), k)) % n);
  }
}

}  // namespace

TEST_CASE("odd modulus matches GMP across limb counts") {
  check_against_mpz<1, false>(3, 30, 1);
  check_against_mpz<1, false>(5, 20, 2);
  check_against_mpz<2, false>(3, 60, 3);
  check_against_mpz<2, false>(7, 40, 4);
  check_against_mpz<3, false>(3, 110, 5);
  check_against_mpz<4, false>(3, 150, 6);
}

TEST_CASE("power of two modulus matches GMP across limb counts") {
  check_against_mpz<1, true>(2, 50, 7);
  check_against_mpz<1, true>(2, 62, 8);
  check_against_mpz<2, true>(2, 100, 9);
  check_against_mpz<3, true>(2, 170, 10);
}

TEST_CASE("constants and width checks") {
  ModPm<1, false> R(3, 10);
  CHECK(R.to_mpz(R.one()) == 1);
  CHECK(R.to_mpz(R.p_power(4)) == 81);
  CHECK(ModPm<1, false>::is_zero(R.p_power(11)));
  CHECK_THROWS_AS((ModPm<1, false>(3, 41)), std::logic_error);
  CHECK_THROWS_AS((ModPm<1, true>(2, 65)), std::logic_error);
}
