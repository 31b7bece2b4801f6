#include "ltf/newton.hpp"

#include <sstream>

#include "ltf/arith.hpp"
#include "ltf/errors.hpp"

namespace ltf {

namespace {

mpq_class qpow(std::int64_t base, int e) { return mpq_class(pow_mpz(base, static_cast<unsigned long>(e))); }

mpq_class x_closed(const ExtensionSpec& spec, int m) {
  if (m == 0) return 1;
  mpq_class x = qpow(spec.q, m) / qpow(spec.p, newton_k(spec, m) + 1);
  x.canonicalize();
  return x;
}

mpq_class y0(const ExtensionSpec& spec) {
  mpq_class y = mpq_class(spec.e, spec.p - 1) - mpq_class(1, spec.q - 1);
  y.canonicalize();
  return y;
}

// m = e n + r with 1 <= r <= e.
mpq_class y_block_form(const ExtensionSpec& spec, int m) {
  const int n = (m - 1) / spec.e;
  const int r = m - spec.e * n;
  const mpq_class pn = qpow(spec.p, n);
  const mpq_class pn1 = pn * spec.p;
  mpq_class y = mpq_class(spec.e) / (pn * (spec.p - 1)) - mpq_class(r) / pn1 - 1 / ((spec.q - 1) * pn1);
  y.canonicalize();
  return y;
}

mpq_class y_sum_form(const ExtensionSpec& spec, int m) {
  mpq_class y(spec.e, spec.p - 1);
  y.canonicalize();
  for (int j = 1; j < m; ++j) y -= 1 / qpow(spec.p, newton_k(spec, j) + 1);
  y -= mpq_class(spec.q) / (qpow(spec.p, newton_k(spec, m) + 1) * (spec.q - 1));
  y.canonicalize();
  return y;
}

mpq_class y_telescoped(const ExtensionSpec& spec, int m) {
  mpq_class y = y0(spec);
  for (int j = 1; j <= m; ++j) y -= (x_closed(spec, j) - x_closed(spec, j - 1)) * newton_edge_slope(spec, j);
  y.canonicalize();
  return y;
}

}  // namespace

int newton_k(const ExtensionSpec& spec, int m) {
  if (m < 1) throw ValidationError("k_m needs m >= 1");
  return (m - 1) / spec.e;
}

mpq_class newton_edge_slope(const ExtensionSpec& spec, int m) {
  if (m < 1) throw ValidationError("edge slope needs m >= 1");
  mpq_class s = 1 / (qpow(spec.q, m - 1) * (spec.q - 1));
  s.canonicalize();
  return s;
}

NewtonVertex xm_ym(const ExtensionSpec& spec, int m) {
  if (m < 0) throw ValidationError("Newton vertex index must be >= 0");
  NewtonVertex v;
  v.m = m;
  v.x = x_closed(spec, m);
  if (m == 0) {
    v.y = y0(spec);
    return v;
  }
  v.y = y_block_form(spec, m);
  const mpq_class by_sum = y_sum_form(spec, m);
  const mpq_class by_slopes = y_telescoped(spec, m);
  if (v.y != by_sum || v.y != by_slopes)
    throw ConsistencyError("NewtonTelescoping", "m=" + std::to_string(m) + ": closed " + v.y.get_str() + ", sum " +
                                                    by_sum.get_str() + ", telescoped " + by_slopes.get_str());
  if (v.x.get_den() != 1) throw ConsistencyError("NewtonTelescoping", "x_" + std::to_string(m) + " not integral");
  return v;
}

std::optional<mpq_class> newton_observed_slope(const ExtensionSpec& spec, int m) {
  if (m < 1) return std::nullopt;
  const NewtonVertex a = xm_ym(spec, m - 1);
  const NewtonVertex b = xm_ym(spec, m);
  if (a.x == b.x) return std::nullopt;
  mpq_class s = (a.y - b.y) / (b.x - a.x);
  s.canonicalize();
  return s;
}

mpq_class qp2_valuation(std::int64_t p, int k) {
  if (k < 1) throw ValidationError("qp2_valuation needs k >= 1");
  const ExtensionSpec spec = make_extension(p, 2, ExtKind::unramified);
  mpq_class v = 1 / (qpow(p, k - 1) * (spec.q - 1));
  v.canonicalize();
  const NewtonVertex vert = xm_ym(spec, k);
  if (vert.x != qpow(p, k) || vert.y != v)
    throw ConsistencyError("Qp2Valuation", "k=" + std::to_string(k) + ": closed " + v.get_str() + ", vertex (" +
                                               vert.x.get_str() + ", " + vert.y.get_str() + ")");
  return v;
}

mpz_class torsion_fixed_count(const ExtensionSpec& spec, int m) {
  if (m < 1) throw ValidationError("torsion_fixed_count needs m >= 1");
  const mpz_class total = pow_mpz(spec.q, static_cast<unsigned long>(m));
  const mpz_class ord = order_of_one(spec, m);
  const mpz_class ord_snf = order_of_one_snf(spec, m);
  if (ord != ord_snf)
    throw ConsistencyError("TorsionCount", "order of 1: closed " + ord.get_str() + ", SNF " + ord_snf.get_str());
  if (total % ord != 0) throw ConsistencyError("TorsionCount", "order of 1 does not divide q^m");
  const mpz_class count = total / ord;
  const mpq_class x = x_closed(spec, m);
  if (mpq_class(count) != x)
    throw ConsistencyError("TorsionCount", "m=" + std::to_string(m) + ": count " + count.get_str() + " but x_m = " +
                                               x.get_str());
  return count;
}

std::string newton_csv(const ExtensionSpec& spec, int max_m) {
  if (max_m < 0) throw ValidationError("max-m must be >= 0");
  std::ostringstream os;
  os << "m,x_num,x_den,y_num,y_den,slope_num,slope_den\n";
  for (int m = 0; m <= max_m; ++m) {
    const NewtonVertex v = xm_ym(spec, m);
    os << m << ',' << v.x.get_num() << ',' << v.x.get_den() << ',' << v.y.get_num() << ',' << v.y.get_den() << ',';
    if (auto s = newton_observed_slope(spec, m)) os << s->get_num() << ',' << s->get_den();
    else os << ',';
    os << '\n';
  }
  return os.str();
}

}  // namespace ltf
