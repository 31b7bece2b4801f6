#include <doctest.h>

#include "ltf/arith.hpp"
#include "ltf/errors.hpp"
#include "ltf/intpoly.hpp"
#include "ltf/spancheck.hpp"
#include "ltf/pnmatrix.hpp"
#include "helpers.hpp"

using namespace ltf;
using namespace ltf::test;

TEST_CASE("greedy ordering achieves w_q(k) and the products have that valuation") {
  for (const auto& spec : {ram(3, 2), unram(2, 2), ram(2, 3), unram(3, 2), ram(5, 1)}) {
    const std::size_t count = 20;
    const auto ord = build_pi_ordering(spec, count);
    REQUIRE(ord.points.size() == count);
    CHECK(ord.precision == default_ordering_precision(spec, count));
    for (std::size_t k = 0; k < count; ++k) {
      CHECK(ord.achieved_vals[k] == w_q(spec, static_cast<std::int64_t>(k)));
      Valuation v = 0;
      for (std::size_t i = 0; i < k; ++i) v = v + (ord.points[k] - ord.points[i]).valuation();
      CHECK(v == Valuation(ord.achieved_vals[k]));
      CHECK(ord.points[k].valuation() >= Valuation(0));
    }
  }
}

TEST_CASE("ordering is independent of thread count and precision choice") {
  const auto spec = unram(2, 2);
  const auto ref = build_pi_ordering(spec, 24);
  PiOrderingOptions opts;
  opts.threads = 4;
  const auto par = build_pi_ordering(spec, 24, opts);
  CHECK(par.points == ref.points);
  const auto wide = build_pi_ordering(spec, 24, ref.precision + 1);
  CHECK(wide.achieved_vals == ref.achieved_vals);
  opts.tie = TieOrder::reverse_lex;
  CHECK(build_pi_ordering(spec, 24, opts).achieved_vals == ref.achieved_vals);
}

TEST_CASE("too little precision is reported with the required value") {
  const auto spec = ram(3, 2);
  const std::int64_t w = w_q(spec, 30);
  const int too_small = static_cast<int>(w / spec.e);
  try {
    build_pi_ordering(spec, 30, too_small);
    FAIL("expected a precision error");
  } catch (const PrecisionError& e) {
    CHECK(e.required() == w / spec.e + 1);
  }
  CHECK_THROWS_AS(build_pi_ordering(spec, 0, 4), ValidationError);
  CHECK_THROWS_AS(build_pi_ordering(unram(2, 2), 100, 40), ValidationError);
}

TEST_CASE("Lagrange basis interpolates on the ordering") {
  const auto spec = ram(3, 2);
  const auto ord = build_pi_ordering(spec, 12);
  const auto f = lagrange_basis(ord, 11);
  REQUIRE(f.size() == 12);
  for (std::size_t k = 0; k < 12; ++k) {
    CHECK(*f[k].degree() == k);
    CHECK(f[k](ord.points[k]).is_one());
    for (std::size_t i = 0; i < k; ++i) CHECK(f[k](ord.points[i]).is_zero());
    CHECK(f[k].lead().valuation() == Valuation(-ord.achieved_vals[k]));
  }
  CHECK_THROWS_AS(lagrange_basis(ord, 12), ValidationError);
}

TEST_CASE("membership in Int(o_L)") {
  for (const auto& spec : {ram(3, 2), unram(2, 2)}) {
    const Field& R = spec.ring_field();
    const auto ord = build_pi_ordering(spec, 30);
    const std::size_t q = static_cast<std::size_t>(spec.q);
    const PolyL fermat = X(R, q) - X(R);
    const FieldElem pinv = R.pi_power(-1);
    CHECK(int_membership(spec, fermat * pinv, ord).member);
    CHECK_FALSE(int_membership(spec, X(R, q) * pinv, ord).member);
    CHECK_FALSE(int_membership(spec, PolyL::constant(pinv), ord).member);
    const auto f = lagrange_basis(ord, 20);
    for (std::size_t k = 0; k <= 20; ++k) {
      const auto m = int_membership(spec, f[k], ord);
      CHECK(m.member);
      for (std::size_t t = 0; t < m.lambda.size(); ++t) CHECK(m.lambda[t] == (t == k ? R.one() : R.zero()));
    }
    CHECK(int_membership(spec, PolyL(R), ord).member);
    CHECK_THROWS_AS(int_membership(spec, X(R, 30), ord), ValidationError);
  }
}

TEST_CASE("interpolated sigma polynomials are integer valued, P_q is not") {
  const auto spec = ram(3, 2);
  const auto ord = build_pi_ordering(spec, 16);
  for (std::size_t j = 0; j <= 10; ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      const auto sig = sigma_poly_interpolated(spec, i, j);
      CHECK(sig(rat(spec.field(), 2)) == sigma_eval(spec, i, j, 2, std::max<std::size_t>(j, 1)));
      CHECK(int_membership(spec, sig, ord).member);
    }
  CHECK_FALSE(int_membership(spec, pn_poly(spec, 3), ord).member);
}

TEST_CASE("embedding rational coefficients") {
  const auto spec = unram(2, 2);
  const auto x = to_ring(spec, rat(spec.field(), 3, 4));
  CHECK(&x.field() == &spec.ring_field());
  CHECK(x == spec.ring_field().from(Q(3, 4)));
  CHECK_THROWS_AS(to_ring(spec, rat(ram(3, 2).field(), 1)), ValidationError);
}
