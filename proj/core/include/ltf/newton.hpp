#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "ltf/extension.hpp"

namespace ltf {

// Vertex (x_m, y_m) of the Newton polygon of Delta_1(Z) - 1; y is a v_pi value.
struct NewtonVertex {
  int m = 0;
  mpq_class x;
  mpq_class y;
};

// k_m = floor((m-1)/e) for m >= 1.
int newton_k(const ExtensionSpec& spec, int m);

// Closed forms for x_m, y_m. For m >= 1 the value of y_m is computed three ways
// (digit-block closed form, partial-sum form, telescoping over slopes) and a
// mismatch throws ConsistencyError("NewtonTelescoping").
NewtonVertex xm_ym(const ExtensionSpec& spec, int m);

// 1 / (q^{m-1}(q-1)), the slope of the edge ending at vertex m.
mpq_class newton_edge_slope(const ExtensionSpec& spec, int m);

// (y_{m-1} - y_m) / (x_m - x_{m-1}); nullopt when x_m = x_{m-1}.
std::optional<mpq_class> newton_observed_slope(const ExtensionSpec& spec, int m);

// val_p(P_{p^k}(Omega)) over Q_{p^2}: 1 / (p^{k-1}(q-1)), checked against y_k / e of xm_ym.
mpq_class qp2_valuation(std::int64_t p, int k);

// Number of pi^m-torsion points z with kappa_z(1) = 1: q^m / order_of_one, checked
// against x_m and the Smith normal form route.
mpz_class torsion_fixed_count(const ExtensionSpec& spec, int m);

// CSV with header m,x_num,x_den,y_num,y_den,slope_num,slope_den for m = 0..max_m.
std::string newton_csv(const ExtensionSpec& spec, int max_m);

}  // namespace ltf
