#include <doctest.h>

#include <random>

#include "ltf/errors.hpp"
#include "ltf/psiq.hpp"
#include "ltf/series.hpp"
#include "helpers.hpp"

using namespace ltf;
using namespace ltf::test;

namespace {

PolyL phi(const ExtensionSpec& spec, const PolyL& g) {
  const std::size_t T = static_cast<std::size_t>(spec.q) * g.degree().value_or(0);
  return phi_apply(TruncSeries::from_poly(g, T), spec, T).to_poly();
}

}  // namespace

TEST_CASE("psi on low monomials") {
  const auto spec = unram(2, 2);
  const Field& F = spec.field();
  const auto m = psi_monomials(spec, 9);
  CHECK(m[0] == PolyL::constant(F.one()));
  CHECK(m[1].is_zero());
  CHECK(m[2].is_zero());
  CHECK(m[3] == PolyL::constant(rat(F, -3, 2)));
  CHECK(m[4] == X(F));
  CHECK(m[6] == PolyL::constant(rat(F, 3)));
  CHECK(m[7] == X(F) * rat(F, -7, 2));
  CHECK(m[8] == X(F, 2));
}

TEST_CASE("psi base case in general and at q = p") {
  for (const auto& spec : {ram(3, 2), unram(2, 2), unram(3, 2), ram(5, 1), ram(2, 1)}) {
    const Field& F = spec.field();
    const auto q = spec.q, p = spec.p;
    const auto m = psi_monomials(spec, static_cast<std::size_t>(2 * q + 1));
    CHECK(m[static_cast<std::size_t>(q - 1)] == PolyL::constant(rat(F, p * (1 - q), q)));
    if (q >= 3)
      CHECK(m[static_cast<std::size_t>(2 * q - 2)] == m[static_cast<std::size_t>(q - 1)] * rat(F, -p));
    if (q >= 4) CHECK(m[static_cast<std::size_t>(2 * q)] == X(F, 2));
  }
  // q = 2: psi(X^2) = X - p psi(X) = X + 2
  const auto spec = ram(2, 1);
  CHECK(psi_monomials(spec, 2)[2] == X(spec.field()) + PolyL::constant(rat(spec.field(), 2)));
}

TEST_CASE("recurrence agrees with the torsion-sum oracle") {
  std::mt19937_64 rng(17);
  for (const auto& spec : {unram(2, 2), unram(3, 2), ram(3, 2), ram(2, 1), ram(5, 1)}) {
    const PsiOracle oracle(spec, 30);
    const auto mono = psi_monomials(spec, 30);
    for (std::size_t k = 0; k <= 30; ++k) CHECK(oracle.apply(X(spec.field(), k)) == mono[k]);
    for (int t = 0; t < 10; ++t) {
      const auto f = random_poly(spec.field(), rng, 30);
      CHECK(oracle.apply(f) == psi_q_poly(spec, f));
    }
  }
}

TEST_CASE("oracle truncation checks") {
  const auto spec = unram(2, 2);
  const std::size_t T = PsiOracle::default_truncation(spec, 20);
  CHECK(PsiOracle(spec, 20, T + 5).apply(X(spec.field(), 20)) == psi_q_poly(spec, X(spec.field(), 20)));
  CHECK_THROWS_AS(PsiOracle(spec, 20, T - 1), ValidationError);
  CHECK(psi_col_oracle(spec, X(spec.field(), 12)) == psi_q_poly(spec, X(spec.field(), 12)));
}

TEST_CASE("psi is linear and left inverse to phi") {
  std::mt19937_64 rng(23);
  for (const auto& spec : {unram(2, 2), ram(3, 2), unram(3, 2)}) {
    const Field& F = spec.field();
    for (int t = 0; t < 10; ++t) {
      const auto f = random_poly(F, rng, 20), g = random_poly(F, rng, 20);
      const auto c = random_elem(F, rng);
      CHECK(psi_q_poly(spec, f * c + g) == psi_q_poly(spec, f) * c + psi_q_poly(spec, g));
      const auto h = random_poly(F, rng, 4);
      CHECK(psi_q_poly(spec, phi(spec, h)) == h);
      // psi(phi(h) f) = h psi(f)
      CHECK(psi_q_poly(spec, phi(spec, h) * f) == h * psi_q_poly(spec, f));
    }
  }
}

TEST_CASE("psi lowers degree to at most k/q") {
  for (const auto& spec : {unram(2, 2), ram(3, 2), ram(2, 1)}) {
    const auto m = psi_monomials(spec, 60);
    for (std::size_t k = 0; k <= 60; ++k)
      if (!m[k].is_zero()) CHECK(*m[k].degree() <= k / static_cast<std::size_t>(spec.q));
  }
}

TEST_CASE("iterated psi integrality trace") {
  const auto spec = unram(2, 2);
  const Field& F = spec.field();
  // p^k X^{q^k - 1} stays integral, p^{k-1} X^{q^k - 1} does not.
  const auto ok = psi_int_test(spec, X(F, 15) * rat(F, 4));
  CHECK(ok.integral);
  CHECK_FALSE(ok.failed_at.has_value());
  CHECK(ok.iterates.size() == ok.min_vals.size());
  CHECK(ok.iterates.back().degree().value_or(0) == 0);
  const auto bad = psi_int_test(spec, X(F, 15) * rat(F, 2));
  CHECK_FALSE(bad.integral);
  REQUIRE(bad.failed_at.has_value());
  CHECK(*bad.failed_at > 0);
  CHECK(bad.min_vals[*bad.failed_at] < Valuation(0));
  const auto zero = psi_int_test(spec, PolyL(F));
  CHECK(zero.iterates.size() == 1);
  CHECK(zero.min_vals[0].is_infinite());
}
