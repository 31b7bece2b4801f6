#include "ltf/pnmatrix.hpp"

#include <thread>

#include "ltf/arith.hpp"
#include "ltf/errors.hpp"

namespace ltf {

namespace {

void enumerate_pn(const ExtensionSpec& spec, const std::vector<std::int64_t>& qpow, std::size_t level,
                  std::int64_t rest, std::size_t ksum, std::int64_t pi_exp, const mpz_class& denom, PolyL& out) {
  if (level == 0) {
    // k_0 = rest
    mpz_class den = denom * factorial(static_cast<std::size_t>(rest));
    FieldElem c = spec.field().pi_power(-pi_exp) * mpq_class(mpz_class(1), den);
    out.add_term(c, ksum + static_cast<std::size_t>(rest));
    return;
  }
  const std::int64_t step = qpow[level];
  for (std::int64_t k = 0; k * step <= rest; ++k)
    enumerate_pn(spec, qpow, level - 1, rest - k * step, ksum + static_cast<std::size_t>(k),
                 pi_exp + static_cast<std::int64_t>(level) * k, denom * factorial(static_cast<std::size_t>(k)), out);
}

}  // namespace

PolyL pn_poly(const ExtensionSpec& spec, std::size_t n) {
  std::vector<std::int64_t> qpow{1};
  while (qpow.back() <= static_cast<std::int64_t>(n) / spec.q) qpow.push_back(qpow.back() * spec.q);
  PolyL out(spec.field());
  enumerate_pn(spec, qpow, qpow.size() - 1, static_cast<std::int64_t>(n), 0, 0, mpz_class(1), out);
  return out;
}

std::vector<PolyL> pn_via_series(const ExtensionSpec& spec, std::size_t N, std::size_t T) {
  if (T < N) throw ValidationError("pn_via_series needs T >= N");
  const Field& f = spec.field();
  TruncSeries lg = log_lt(spec, Coordinate::ST, T);
  // exp(Y log Z) = sum_k Y^k log(Z)^k / k!; log^k starts at Z^k so k <= N suffices.
  std::vector<std::vector<FieldElem>> coeffs(N + 1);
  TruncSeries power(f, T);
  power.set(0, f.one());
  for (std::size_t k = 0; k <= N; ++k) {
    const mpq_class inv_fact(mpz_class(1), factorial(k));
    for (std::size_t n = k; n <= N; ++n) {
      if (coeffs[n].size() <= k) coeffs[n].resize(k + 1, f.zero());
      coeffs[n][k] = power[n] * inv_fact;
    }
    power = power * lg;
  }
  std::vector<PolyL> out;
  for (std::size_t n = 0; n <= N; ++n) {
    out.emplace_back(f, coeffs[n]);
    if (!(out.back() == pn_poly(spec, n)))
      throw ConsistencyError("polypm", "series and enumeration routes disagree on P_" + std::to_string(n));
  }
  return out;
}

UTMatrix<FieldElem> d_matrix(const ExtensionSpec& spec, std::size_t N, unsigned threads) {
  if (N < 1) throw ValidationError("d_matrix needs N >= 1");
  const Field& f = spec.field();
  UTMatrix<FieldElem> D(N, f.zero());
  std::vector<std::size_t> qpow;
  std::vector<FieldElem> pi_inv;
  for (std::size_t v = 1, r = 0; v < N; v *= static_cast<std::size_t>(spec.q), ++r) {
    qpow.push_back(v);
    pi_inv.push_back(f.pi_power(-static_cast<std::int64_t>(r)));
    if (v > N / static_cast<std::size_t>(spec.q)) break;
  }
  D.at(0, 0) = f.one();
  threads = std::max(1u, threads);
  for (std::size_t i = 1; i < N; ++i) {
    auto fill = [&](std::size_t j0, std::size_t j1) {
      for (std::size_t j = j0; j < j1; ++j) {
        FieldElem acc = f.zero();
        for (std::size_t r = 0; r < qpow.size() && qpow[r] <= j; ++r) {
          std::size_t src = j - qpow[r];
          if (src + 1 < i) break;
          const FieldElem& prev = D.at(i - 1, src);
          if (!prev.is_zero()) acc += r == 0 ? prev : prev * pi_inv[r];
        }
        D.at(i, j) = std::move(acc);
      }
    };
    const std::size_t width = N - i;
    if (threads == 1 || width < 64) {
      fill(i, N);
      continue;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (width + threads - 1) / threads;
    for (std::size_t j0 = i; j0 < N; j0 += chunk) pool.emplace_back(fill, j0, std::min(N, j0 + chunk));
    for (auto& t : pool) t.join();
  }
  return D;
}

UTMatrix<FieldElem> r_matrix(const UTMatrix<FieldElem>& D, const ExtensionSpec& spec, std::int64_t a, std::size_t S) {
  if (a < 0 || a > spec.q - 2) throw ValidationError("residue a must lie in 0..q-2");
  if (S < 1) throw ValidationError("r_matrix needs S >= 1");
  if (underline(spec, a, S - 1) >= D.size()) throw ValidationError("D matrix too small for requested r^(a)");
  UTMatrix<FieldElem> r(S, spec.field().zero());
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = i; j < S; ++j) r.at(i, j) = D.at(underline(spec, a, i), underline(spec, a, j));
  return r;
}

UTMatrix<FieldElem> r_matrix(const ExtensionSpec& spec, std::int64_t a, std::size_t S) {
  if (a < 0 || a > spec.q - 2) throw ValidationError("residue a must lie in 0..q-2");
  return r_matrix(d_matrix(spec, underline(spec, a, S - 1) + 1), spec, a, S);
}

void check_integral_mcs(const ExtensionSpec& spec, std::int64_t a, const UTMatrix<FieldElem>& r) {
  const Field& f = spec.field();
  const Valuation bound(spec.q - 1);
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (!(r.at(j, j) == f.one()))
      throw ConsistencyError("IntegralMCs", "r_{" + std::to_string(j) + "," + std::to_string(j) + "} != 1");
    for (std::size_t i = 0; i < j; ++i) {
      const FieldElem scaled = r.at(i, j) * f.pi_power(static_cast<std::int64_t>(j - i));
      const std::string at = "(a=" + std::to_string(a) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
      if (scaled.valuation() < Valuation(0))
        throw ConsistencyError("IntegralMCs", "pi^(j-i) r_ij not integral at " + at);
      const FieldElem binom = f.from(mpq_class(binomial(underline(spec, a, i), j - i)));
      if ((scaled - binom).valuation() < bound)
        throw ConsistencyError("IntegralMCs", "pi^(j-i) r_ij not congruent to binom(i_, j-i) mod pi^(q-1) at " + at);
    }
  }
}

std::vector<TruncSeries> mult_by_powers(const ExtensionSpec& spec, std::int64_t a, std::size_t max_power,
                                        std::size_t T) {
  TruncSeries base = mult_by(spec, Coordinate::ST, a, T);
  std::vector<TruncSeries> out;
  TruncSeries cur(spec.field(), T);
  cur.set(0, spec.field().one());
  for (std::size_t i = 0; i <= max_power; ++i) {
    out.push_back(cur);
    if (i < max_power) cur = cur * base;
  }
  return out;
}

FieldElem sigma_eval(const ExtensionSpec& spec, std::size_t i, std::size_t j, std::int64_t a, std::size_t T) {
  if (i > j || j > T) throw ValidationError("sigma_eval needs i <= j <= T");
  return mult_by(spec, Coordinate::ST, a, T).pow(static_cast<unsigned>(i))[j];
}

}  // namespace ltf
