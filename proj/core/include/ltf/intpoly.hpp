#pragma once

#include <cstdint>
#include <vector>

#include "ltf/extension.hpp"
#include "ltf/poly.hpp"

namespace ltf {

enum class TieOrder { lex, reverse_lex };

struct PiOrderingOptions {
  TieOrder tie = TieOrder::lex;
  unsigned threads = 1;  // 0 = hardware concurrency
};

// Greedy pi-ordering of o_L drawn from a transversal of o_L / pi^precision.
// Points live in spec.ring_field().
struct PiOrdering {
  std::vector<FieldElem> points;
  int precision = 0;
  // v_pi(prod_{i<k} (alpha_k - alpha_i)); certified equal to w_q(k).
  std::vector<std::int64_t> achieved_vals;
};

// Smallest precision P with e P > w_q(count) + e and q^P >= count.
int default_ordering_precision(const ExtensionSpec& spec, std::size_t count);

// Throws PrecisionError when e * precision <= w_q(count) or the transversal has fewer
// than count classes, and ConsistencyError("PiOrdering") if the greedy result misses w_q.
PiOrdering build_pi_ordering(const ExtensionSpec& spec, std::size_t count, int precision,
                             const PiOrderingOptions& opts = {});
PiOrdering build_pi_ordering(const ExtensionSpec& spec, std::size_t count, const PiOrderingOptions& opts = {});

// f_0 = 1, f_k = prod_{i<k} (X - alpha_i) / (alpha_k - alpha_i), for k = 0..n.
std::vector<PolyL> lagrange_basis(const PiOrdering& ord, std::size_t n);

struct IntMembership {
  std::vector<FieldElem> lambda;  // g = sum_k lambda_k f_k
  bool member = true;
};

// Triangular solve lambda_t = g(alpha_t) - sum_{s<t} lambda_s f_s(alpha_t). g may be over
// spec.field() or spec.ring_field().
IntMembership int_membership(const ExtensionSpec& spec, const PolyL& g, const PiOrdering& ord);

// Image of an element of spec.field() in spec.ring_field().
FieldElem to_ring(const ExtensionSpec& spec, const FieldElem& x);
PolyL to_ring(const ExtensionSpec& spec, const PolyL& g);

// sigma_{i,j}(Y) interpolated from sigma_eval at Y = 0..j.
PolyL sigma_poly_interpolated(const ExtensionSpec& spec, std::size_t i, std::size_t j);

}  // namespace ltf
