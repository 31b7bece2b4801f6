#include "ltf/psiq.hpp"

#include "ltf/arith.hpp"
#include "ltf/errors.hpp"
#include "ltf/series.hpp"

namespace ltf {

std::vector<PolyL> psi_monomials(const ExtensionSpec& spec, std::size_t K) {
  const Field& f = spec.field();
  const std::size_t q = static_cast<std::size_t>(spec.q);
  std::vector<PolyL> out;
  out.reserve(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    if (k == 0) {
      out.push_back(PolyL::constant(f.one()));
    } else if (k + 1 < q) {
      out.emplace_back(f);
    } else if (k + 1 == q) {
      // (1/q) sum_zeta zeta^{q-1} = p(1-q)/q; this is (1-q)/p when q = p^2.
      mpq_class c(spec.p * (1 - spec.q), spec.q);
      c.canonicalize();
      out.push_back(PolyL::constant(f.from(c)));
    } else {
      PolyL v = out[k - q].shift(1);
      v -= out[k - q + 1] * f.from(mpq_class(spec.p));
      out.push_back(std::move(v));
    }
  }
  return out;
}

PolyL psi_q_poly(const ExtensionSpec& spec, const PolyL& f) {
  PolyL out(spec.field());
  const auto deg = f.degree();
  if (!deg) return out;
  const std::vector<PolyL> mono = psi_monomials(spec, *deg);
  for (std::size_t k = 0; k <= *deg; ++k)
    if (!f.coeff(k).is_zero()) out += mono[k] * f.coeff(k);
  return out;
}

namespace {

// Element of Q[W]/(W^{q-1} + p), coordinates of W^0..W^{q-2}.
using AElem = std::vector<mpq_class>;

struct AlgebraA {
  std::size_t n;  // q - 1
  mpq_class p;

  AElem zero() const { return AElem(n); }
  AElem mul(const AElem& a, const AElem& b) const {
    AElem r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j] == 0) continue;
        mpq_class t = a[i] * b[j];
        if (i + j < n) r[i + j] += t;
        else r[i + j - n] -= p * t;
      }
    }
    return r;
  }
  void add_scaled(AElem& acc, const AElem& a, const mpq_class& s) const {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != 0) acc[i] += s * a[i];
  }
};

using ASeries = std::vector<AElem>;

ASeries series_mul(const AlgebraA& A, const ASeries& a, const ASeries& b, std::size_t T) {
  ASeries r(T + 1, A.zero());
  for (std::size_t i = 0; i <= T; ++i)
    for (std::size_t j = 0; i + j <= T; ++j) {
      AElem t = A.mul(a[i], b[j]);
      A.add_scaled(r[i + j], t, 1);
    }
  return r;
}

// t with p t + t^q = p X + X^q and t(0) = W, to degree T.
// Coefficients come from the power recurrence for P = t^q:
// m t_0 P_m = sum_{k=1}^m (q k - m + k) t_k P_{m-k}; the k = m term is q t_0^{q-1} t_m m t_0.
ASeries torsion_translate(const ExtensionSpec& spec, const AlgebraA& A, std::size_t T) {
  const std::size_t n = A.n;
  const std::int64_t q = spec.q;
  AElem w = A.zero();
  AElem w_inv = A.zero();
  if (n == 1) {
    w[0] = -A.p;
    w_inv[0] = mpq_class(-1) / A.p;
  } else {
    w[1] = 1;
    w_inv[n - 1] = mpq_class(-1) / A.p;
  }
  AElem w_qm1 = A.zero();  // W^{q-1} = -p
  w_qm1[0] = -A.p;

  ASeries t(T + 1, A.zero());
  ASeries P(T + 1, A.zero());
  t[0] = w;
  P[0] = w_qm1;
  P[0] = A.mul(P[0], w);  // t_0^q = W^{q-1} W
  const mpq_class denom = A.p * mpq_class(1 - q);
  for (std::size_t m = 1; m <= T; ++m) {
    AElem rest = A.zero();
    for (std::size_t k = 1; k < m; ++k) {
      const mpq_class c(static_cast<long>(q) * static_cast<long>(k) - static_cast<long>(m) + static_cast<long>(k));
      if (c == 0) continue;
      A.add_scaled(rest, A.mul(t[k], P[m - k]), c);
    }
    rest = A.mul(rest, w_inv);
    for (auto& x : rest) x /= static_cast<long>(m);
    AElem rhs = A.zero();
    if (m == 1) rhs[0] = A.p;
    if (m == static_cast<std::size_t>(q)) rhs[0] += 1;
    AElem tm = rhs;
    A.add_scaled(tm, rest, -1);
    for (auto& x : tm) x /= denom;
    t[m] = tm;
    P[m] = rest;
    A.add_scaled(P[m], A.mul(w_qm1, tm), mpq_class(q));
  }
  return t;
}

}  // namespace

std::size_t PsiOracle::default_truncation(const ExtensionSpec& spec, std::size_t d) {
  const std::size_t q = static_cast<std::size_t>(spec.q);
  return q * (d / q + 1);
}

PsiOracle::PsiOracle(const ExtensionSpec& spec, std::size_t max_deg)
    : PsiOracle(spec, max_deg, default_truncation(spec, max_deg)) {}

PsiOracle::PsiOracle(const ExtensionSpec& spec, std::size_t max_deg, std::size_t T)
    : spec_(spec), max_deg_(max_deg), T_(T) {
  if (T < default_truncation(spec, max_deg))
    throw ValidationError("psi oracle truncation " + std::to_string(T) + " too small for degree " +
                          std::to_string(max_deg) + "; need " + std::to_string(default_truncation(spec, max_deg)));
  const AlgebraA A{static_cast<std::size_t>(spec.q - 1), mpq_class(spec.p)};
  const ASeries t = torsion_translate(spec, A, T);
  // Trace of W^i over the roots of W^{q-1} + p is (q-1) delta_{i,0} for i < q-1.
  const mpq_class tr_scale(spec.q - 1);
  trace_.assign(max_deg + 1, std::vector<mpq_class>(T + 1));
  ASeries power(T + 1, A.zero());
  power[0][0] = 1;
  for (std::size_t j = 0; j <= max_deg; ++j) {
    if (j > 0) power = series_mul(A, power, t, T);
    for (std::size_t m = 0; m <= T; ++m) trace_[j][m] = tr_scale * power[m][0];
  }
}

PolyL PsiOracle::apply(const PolyL& f) const {
  const Field& fld = spec_.field();
  const auto deg = f.degree();
  if (!deg) return PolyL(fld);
  if (*deg > max_deg_)
    throw ValidationError("psi oracle built for degree <= " + std::to_string(max_deg_));
  std::vector<FieldElem> sum(T_ + 1, fld.zero());
  for (std::size_t j = 0; j <= *deg; ++j) {
    const FieldElem& c = f.coeff(j);
    if (c.is_zero()) continue;
    sum[j] += c;
    for (std::size_t m = 0; m <= T_; ++m)
      if (trace_[j][m] != 0) sum[m] += c * trace_[j][m];
  }
  const mpq_class inv_q(1, spec_.q);
  for (auto& c : sum) c *= inv_q;
  try {
    return phi_unapply(TruncSeries(fld, T_, sum), spec_, T_).to_poly();
  } catch (const NotInImage& e) {
    throw ConsistencyError("PsiOracle", e.what());
  }
}

PolyL psi_col_oracle(const ExtensionSpec& spec, const PolyL& f, std::size_t T) {
  return PsiOracle(spec, f.degree().value_or(0), T).apply(f);
}

PolyL psi_col_oracle(const ExtensionSpec& spec, const PolyL& f) {
  return PsiOracle(spec, f.degree().value_or(0)).apply(f);
}

PsiTrace psi_int_test(const ExtensionSpec& spec, const PolyL& f) {
  PsiTrace tr;
  PolyL cur = f;
  for (;;) {
    const Valuation v = cur.min_valuation();
    const std::size_t idx = tr.iterates.size();
    tr.iterates.push_back(cur);
    tr.min_vals.push_back(v);
    if (v < Valuation(0) && tr.integral) {
      tr.integral = false;
      tr.failed_at = idx;
    }
    const auto deg = cur.degree();
    if (!deg || *deg == 0) break;
    PolyL next = psi_q_poly(spec, cur);
    if (next.degree() && *next.degree() >= *deg)
      throw ConsistencyError("PsiDegree", "degree did not drop from " + std::to_string(*deg));
    cur = std::move(next);
  }
  return tr;
}

}  // namespace ltf
