#include <doctest.h>

#include <random>

#include "ltf/errors.hpp"
#include "ltf/series.hpp"
#include "helpers.hpp"

using namespace ltf;
using namespace ltf::test;

TEST_CASE("standard logarithm has coefficients pi^-k at q^k") {
  const auto spec = ram(3, 2);
  const auto lg = log_lt(spec, Coordinate::ST, 30);
  const Field& F = spec.field();
  CHECK(lg[1].is_one());
  CHECK(lg[3] == F.pi_power(-1));
  CHECK(lg[9] == F.pi_power(-2));
  CHECK(lg[27] == F.pi_power(-3));
  CHECK(lg[2].is_zero());
  CHECK(lg[10].is_zero());
  CHECK_THROWS_AS(log_lt(spec, Coordinate::ST, 0), ValidationError);
}

TEST_CASE("logarithm in the Frobenius coordinate") {
  const auto spec = unram(2, 2);
  const auto lg = log_lt(spec, Coordinate::COL, 12);
  CHECK(lg[1].is_one());
  CHECK(lg[4] == rat(spec.field(), -1, 14));
  CHECK(lg[2].is_zero());
  CHECK(lg[3].is_zero());
  // log([p](X)) = p log(X)
  const auto lhs = lg.compose(frobenius_col(spec, 12));
  CHECK(lhs == lg * rat(spec.field(), 2));
}

TEST_CASE("exp inverts log in both coordinates") {
  for (const auto& spec : {ram(3, 2), unram(2, 2), ram(2, 1)}) {
    for (auto coord : {Coordinate::ST, Coordinate::COL}) {
      const auto lg = log_lt(spec, coord, 20);
      const auto ex = exp_lt(spec, coord, 20);
      const auto id = TruncSeries::variable(spec.field(), 20);
      CHECK(ex.compose(lg) == id);
      CHECK(lg.compose(ex) == id);
    }
  }
  const auto spec = ram(3, 2);
  CHECK(exp_lt(spec, Coordinate::ST, 10)[3] == -spec.field().pi_power(-1));
}

TEST_CASE("formal group law is a commutative group law with integral coefficients") {
  constexpr std::size_t T = 12;
  for (const auto& spec : {ram(3, 2), unram(2, 2)}) {
    for (auto coord : {Coordinate::ST, Coordinate::COL}) {
      const Field& F = spec.field();
      const auto G = group_law(spec, coord, T);
      CHECK(G.min_valuation() >= Valuation(0));
      CHECK(G.coeff(1, 0).is_one());
      CHECK(G.coeff(0, 1).is_one());
      for (int i = 0; i <= static_cast<int>(T); ++i) {
        CHECK(G.coeff(i, 0) == (i == 1 ? F.one() : F.zero()));
        for (int j = 0; i + j <= static_cast<int>(T); ++j) CHECK(G.coeff(i, j) == G.coeff(j, i));
      }
      // F(F(x, y), z) = F(x, F(y, z)) in three variables.
      const auto x = MultiSeries::variable(F, 3, T, 0);
      const auto y = MultiSeries::variable(F, 3, T, 1);
      const auto z = MultiSeries::variable(F, 3, T, 2);
      const auto xy = G.substitute(x, y);
      const auto yz = G.substitute(y, z);
      CHECK(G.substitute(xy, z) == G.substitute(x, yz));
      // Lubin-Tate endomorphisms: [a](F(x, y)) = F([a]x, [a]y).
      const auto two = mult_by(spec, coord, 2, T);
      const auto x2 = MultiSeries::variable(F, 2, T, 0);
      const auto y2 = MultiSeries::variable(F, 2, T, 1);
      CHECK(G.apply(two) == G.substitute(x2.apply(two), y2.apply(two)));
    }
  }
}

TEST_CASE("multiplication by integers") {
  const auto spec = ram(3, 2);
  const Field& F = spec.field();
  const auto one = mult_by(spec, Coordinate::ST, 1, 15);
  CHECK(one == TruncSeries::variable(F, 15));
  const auto zero = mult_by(spec, Coordinate::ST, 0, 15);
  CHECK(zero == TruncSeries(F, 15));
  const auto a2 = mult_by(spec, Coordinate::ST, 2, 15), a3 = mult_by(spec, Coordinate::ST, 3, 15);
  CHECK(a2.compose(a3) == mult_by(spec, Coordinate::ST, 6, 15));
  CHECK(a3.min_valuation() >= Valuation(0));
  // [a](Z) = aZ + O(Z^2)
  CHECK(a3[1] == rat(F, 3));
}

TEST_CASE("phi round trip and non-image detection") {
  const auto spec = unram(2, 2);
  const Field& F = spec.field();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_poly(F, rng, 5);
    const std::size_t T = 24;
    const auto h = phi_apply(TruncSeries::from_poly(g, T), spec, T);
    const auto back = phi_unapply(h, spec, T);
    CHECK(back.to_poly() == g);
  }
  TruncSeries x = TruncSeries::variable(F, 12);
  x.set(2, F.one());
  CHECK_THROWS_AS(phi_unapply(x, spec, 12), NotInImage);
}

TEST_CASE("powers of the Frobenius series") {
  const auto spec = ram(3, 2);
  const auto fr = frobenius_col(spec, 40);
  for (std::size_t m = 0; m <= 5; ++m) {
    const auto pw = fr.pow(static_cast<unsigned>(m));
    for (std::size_t n = 0; n <= 40; ++n)
      CHECK(pw[n] == spec.field().from(mpq_class(frobenius_power_coeff(spec, m, n))));
  }
}
