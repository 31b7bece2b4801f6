#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "ltf/extension.hpp"
#include "ltf/poly.hpp"

namespace ltf {

// psi_q in the COL coordinate ([p](X) = pX + X^q), polynomials in X over spec.field().

// psi_q(X^k) for k = 0..K from psi_q(1) = 1, psi_q(X^i) = 0 (0 < i < q-1),
// psi_q(X^{q-1}) = p(1-q)/q and psi_q(X^k) = X psi_q(X^{k-q}) - p psi_q(X^{k-q+1}).
std::vector<PolyL> psi_monomials(const ExtensionSpec& spec, std::size_t K);
PolyL psi_q_poly(const ExtensionSpec& spec, const PolyL& f);

// Torsion-sum route: psi_q(f) = phi^{-1}((1/q) sum_zeta f(zeta (+) X)). Each zeta (+) X
// with zeta != 0 is the solution t of [p](t) = [p](X), t(0) = W in Q[W]/(W^{q-1} + p),
// and the sum over zeta is the trace of that algebra. Traces of t^j are cached.
class PsiOracle {
 public:
  // Valid for polynomials of degree <= max_deg; T is the X-truncation used for phi^{-1}.
  PsiOracle(const ExtensionSpec& spec, std::size_t max_deg, std::size_t T);
  PsiOracle(const ExtensionSpec& spec, std::size_t max_deg);

  std::size_t max_degree() const { return max_deg_; }
  std::size_t truncation() const { return T_; }
  // Throws ConsistencyError("PsiOracle") if the torsion sum is not phi of a polynomial.
  PolyL apply(const PolyL& f) const;

  // Smallest truncation that bounds deg psi_q(f) for deg f <= d.
  static std::size_t default_truncation(const ExtensionSpec& spec, std::size_t d);

 private:
  ExtensionSpec spec_;
  std::size_t max_deg_;
  std::size_t T_;
  // trace_[j][m] = [X^m] sum_{zeta != 0} (zeta (+) X)^j
  std::vector<std::vector<mpq_class>> trace_;
};

PolyL psi_col_oracle(const ExtensionSpec& spec, const PolyL& f, std::size_t T);
PolyL psi_col_oracle(const ExtensionSpec& spec, const PolyL& f);

struct PsiTrace {
  std::vector<PolyL> iterates;      // psi_q^0 f, psi_q^1 f, ... down to a constant
  std::vector<Valuation> min_vals;  // minimal v_pi over coefficients of each iterate
  bool integral = true;
  std::optional<std::size_t> failed_at;  // first iterate with a negative valuation
};

PsiTrace psi_int_test(const ExtensionSpec& spec, const PolyL& f);

}  // namespace ltf
