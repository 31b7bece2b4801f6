#include "ltf/series.hpp"

#include <algorithm>
#include <numeric>

#include "ltf/arith.hpp"
#include "ltf/errors.hpp"

namespace ltf {

TruncSeries::TruncSeries(const Field& f, std::size_t bound) : f_(&f), c_(bound + 1, f.zero()) {}

TruncSeries::TruncSeries(const Field& f, std::size_t bound, const std::vector<FieldElem>& coeffs)
    : TruncSeries(f, bound) {
  for (std::size_t i = 0; i < coeffs.size() && i <= bound; ++i) c_[i] = coeffs[i];
}

TruncSeries TruncSeries::variable(const Field& f, std::size_t bound) {
  TruncSeries s(f, bound);
  if (bound >= 1) s.c_[1] = f.one();
  return s;
}

TruncSeries TruncSeries::from_poly(const PolyL& p, std::size_t bound) {
  return TruncSeries(p.field(), bound, p.coeffs());
}

void TruncSeries::set(std::size_t n, FieldElem v) {
  if (n < c_.size()) c_[n] = std::move(v);
}

Valuation TruncSeries::min_valuation() const {
  Valuation v = Valuation::infinity();
  for (const auto& c : c_) v = std::min(v, c.valuation());
  return v;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const FieldElem& s) {
  for (auto& c : c_) c = c * s;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t T = std::min(a.bound(), b.bound());
  TruncSeries r(*a.f_, T);
  for (std::size_t i = 0; i <= T; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= T; ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncSeries TruncSeries::pow(unsigned k) const {
  TruncSeries result(*f_, bound());
  result.c_[0] = f_->one();
  TruncSeries base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = result * base;
    if (k > 1) base = base * base;
  }
  return result;
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
  if (!inner.c_[0].is_zero()) throw std::invalid_argument("compose: inner series has a constant term");
  const std::size_t T = std::min(bound(), inner.bound());
  TruncSeries r(*f_, T);
  for (std::size_t k = T + 1; k-- > 0;) {
    r = r * inner;
    r.c_[0] += c_[k];
  }
  return r;
}

TruncSeries TruncSeries::reversion() const {
  if (!c_[0].is_zero() || bound() < 1 || c_[1].is_zero())
    throw std::invalid_argument("reversion needs f(0) = 0 and f'(0) != 0");
  const std::size_t T = bound();
  const FieldElem inv1 = c_[1].inverse();
  TruncSeries e(*f_, T);
  e.c_[1] = inv1;
  // powers[k] = this^k; e_n solves [Z^n] sum_k e_k this^k = 0 for n >= 2.
  std::vector<TruncSeries> powers{TruncSeries(*f_, T), *this};
  powers[0].c_[0] = f_->one();
  FieldElem inv_pow = inv1;
  for (std::size_t n = 2; n <= T; ++n) {
    powers.push_back(powers.back() * *this);
    inv_pow = inv_pow * inv1;
    FieldElem acc = f_->zero();
    for (std::size_t k = 1; k < n; ++k)
      if (!e.c_[k].is_zero()) acc += e.c_[k] * powers[k].c_[n];
    e.c_[n] = -(acc * inv_pow);
  }
  return e;
}

MultiSeries::MultiSeries(const Field& f, int nvars, std::size_t bound) : f_(&f), nvars_(nvars), bound_(bound) {
  if (nvars < 1 || nvars > 3) throw std::invalid_argument("MultiSeries supports 1 to 3 variables");
  const int side = static_cast<int>(bound) + 1;
  const int T = static_cast<int>(bound);
  lookup_.assign(static_cast<std::size_t>(nvars == 1 ? side : nvars == 2 ? side * side : side * side * side), -1);
  for (int deg = 0; deg <= T; ++deg)
    for (int i = deg; i >= 0; --i) {
      if (nvars == 1) {
        if (i == deg) exps_.push_back({i, 0, 0});
        continue;
      }
      for (int j = deg - i; j >= 0; --j) {
        int k = deg - i - j;
        if (nvars == 2 && k != 0) continue;
        exps_.push_back({i, j, k});
      }
    }
  for (std::size_t idx = 0; idx < exps_.size(); ++idx) {
    const auto& e = exps_[idx];
    lookup_[position(e[0], e[1], e[2])] = static_cast<int>(idx);
  }
  c_.assign(exps_.size(), f.zero());
}

int MultiSeries::index(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i + j + k > static_cast<int>(bound_)) return -1;
  if ((nvars_ < 2 && j) || (nvars_ < 3 && k)) return -1;
  return lookup_[position(i, j, k)];
}

std::size_t MultiSeries::position(int i, int j, int k) const {
  const std::size_t side = bound_ + 1;
  if (nvars_ == 1) return static_cast<std::size_t>(i);
  if (nvars_ == 2) return static_cast<std::size_t>(i) * side + static_cast<std::size_t>(j);
  return (static_cast<std::size_t>(i) * side + static_cast<std::size_t>(j)) * side + static_cast<std::size_t>(k);
}

MultiSeries MultiSeries::variable(const Field& f, int nvars, std::size_t bound, int which) {
  MultiSeries s(f, nvars, bound);
  if (bound >= 1) {
    std::array<int, 3> e{0, 0, 0};
    e[which] = 1;
    s.set(e[0], e[1], e[2], f.one());
  }
  return s;
}

MultiSeries MultiSeries::embed(const TruncSeries& t, int nvars, int which) {
  MultiSeries s(t.field(), nvars, t.bound());
  for (std::size_t n = 0; n <= t.bound(); ++n) {
    std::array<int, 3> e{0, 0, 0};
    e[which] = static_cast<int>(n);
    s.set(e[0], e[1], e[2], t[n]);
  }
  return s;
}

FieldElem MultiSeries::coeff(int i, int j, int k) const {
  int idx = index(i, j, k);
  return idx < 0 ? f_->zero() : c_[idx];
}

void MultiSeries::set(int i, int j, int k, FieldElem v) {
  int idx = index(i, j, k);
  if (idx >= 0) c_[idx] = std::move(v);
}

Valuation MultiSeries::min_valuation() const {
  Valuation v = Valuation::infinity();
  for (const auto& c : c_) v = std::min(v, c.valuation());
  return v;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

MultiSeries& MultiSeries::operator*=(const FieldElem& s) {
  for (auto& c : c_) c = c * s;
  return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  MultiSeries r(*a.f_, a.nvars_, std::min(a.bound_, b.bound_));
  const int T = static_cast<int>(r.bound_);
  for (std::size_t ia = 0; ia < a.c_.size(); ++ia) {
    if (a.c_[ia].is_zero()) continue;
    const auto& ea = a.exps_[ia];
    const int da = ea[0] + ea[1] + ea[2];
    if (da > T) break;
    for (std::size_t ib = 0; ib < b.c_.size(); ++ib) {
      const auto& eb = b.exps_[ib];
      if (da + eb[0] + eb[1] + eb[2] > T) break;
      if (b.c_[ib].is_zero()) continue;
      int idx = r.index(ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]);
      r.c_[idx] += a.c_[ia] * b.c_[ib];
    }
  }
  return r;
}

MultiSeries MultiSeries::apply(const TruncSeries& f) const {
  if (!c_[0].is_zero()) throw std::invalid_argument("apply: argument has a constant term");
  const std::size_t T = std::min(bound_, f.bound());
  MultiSeries r(*f_, nvars_, T);
  for (std::size_t k = T + 1; k-- > 0;) {
    r = r * *this;
    r.c_[0] += f[k];
  }
  return r;
}

MultiSeries MultiSeries::substitute(const MultiSeries& u, const MultiSeries& v) const {
  if (nvars_ != 2) throw std::invalid_argument("substitute needs a bivariate outer series");
  if (!u.c_[0].is_zero() || !v.c_[0].is_zero()) throw std::invalid_argument("substitute: constant term");
  const int T = static_cast<int>(std::min({bound_, u.bound_, v.bound_}));
  std::vector<MultiSeries> vpow{MultiSeries(*f_, u.nvars_, T)};
  vpow[0].c_[0] = f_->one();
  for (int j = 1; j <= T; ++j) vpow.push_back(vpow.back() * v);
  MultiSeries r(*f_, u.nvars_, T);
  for (int i = T; i >= 0; --i) {
    r = r * u;
    for (int j = 0; i + j <= T; ++j) {
      FieldElem c = coeff(i, j);
      if (c.is_zero()) continue;
      MultiSeries term = vpow[j];
      term *= c;
      r += term;
    }
  }
  return r;
}

TruncSeries frobenius_col(const ExtensionSpec& spec, std::size_t T) {
  const Field& f = spec.field();
  TruncSeries s(f, T);
  if (T >= 1) s.set(1, f.from(mpq_class(static_cast<long>(spec.p))));
  if (static_cast<std::int64_t>(T) >= spec.q) s.set(spec.q, f.one());
  return s;
}

mpz_class frobenius_power_coeff(const ExtensionSpec& spec, std::size_t m, std::size_t n) {
  if (n < m) return 0;
  const std::size_t qm1 = static_cast<std::size_t>(spec.q - 1);
  if ((n - m) % qm1 != 0) return 0;
  std::size_t j = (n - m) / qm1;
  if (j > m) return 0;
  return binomial(m, j) * pow_mpz(spec.p, m - j);
}

TruncSeries log_lt(const ExtensionSpec& spec, Coordinate coord, std::size_t T) {
  if (T < 1) throw ValidationError("log_lt needs T >= 1");
  const Field& f = spec.field();
  TruncSeries s(f, T);
  if (coord == Coordinate::ST) {
    std::int64_t k = 0;
    for (std::int64_t deg = 1; deg <= static_cast<std::int64_t>(T); ++k) {
      s.set(deg, f.pi_power(-k));
      if (__builtin_mul_overflow(deg, spec.q, &deg)) break;
    }
    return s;
  }
  std::vector<mpq_class> c(T + 1, 0);
  c[1] = 1;
  const mpz_class p(static_cast<long>(spec.p));
  for (std::size_t n = 2; n <= T; ++n) {
    mpq_class rhs = 0;
    for (std::size_t m = 1; m < n; ++m)
      if (c[m] != 0) rhs += c[m] * mpq_class(frobenius_power_coeff(spec, m, n));
    c[n] = rhs / mpq_class(p - pow_mpz(spec.p, n));
  }
  for (std::size_t n = 1; n <= T; ++n) s.set(n, f.from(c[n]));
  return s;
}

TruncSeries exp_lt(const ExtensionSpec& spec, Coordinate coord, std::size_t T) {
  return log_lt(spec, coord, T).reversion();
}

BiSeries group_law(const ExtensionSpec& spec, Coordinate coord, std::size_t T) {
  if (T < 2) throw ValidationError("group_law needs T >= 2");
  TruncSeries lg = log_lt(spec, coord, T);
  MultiSeries u = MultiSeries::embed(lg, 2, 0) + MultiSeries::embed(lg, 2, 1);
  BiSeries F = u.apply(lg.reversion());
  for (std::size_t i = 0; i < F.size(); ++i)
    if (F.at(i).valuation() < Valuation(0)) {
      const auto& e = F.exponent(i);
      throw ConsistencyError("group_law", "coefficient of X^" + std::to_string(e[0]) + " Y^" + std::to_string(e[1]) +
                                              " has negative valuation");
    }
  return F;
}

TruncSeries mult_by(const ExtensionSpec& spec, Coordinate coord, std::int64_t a, std::size_t T) {
  TruncSeries lg = log_lt(spec, coord, T);
  TruncSeries e = lg.reversion();
  lg *= spec.field().from(mpq_class(static_cast<long>(a)));
  return e.compose(lg);
}

TruncSeries phi_apply(const TruncSeries& f, const ExtensionSpec& spec, std::size_t T) {
  TruncSeries g(f.field(), T, f.coeffs());
  return g.compose(frobenius_col(spec, T));
}

TruncSeries phi_unapply(const TruncSeries& h, const ExtensionSpec& spec, std::size_t T) {
  const Field& f = h.field();
  const std::size_t K = T / static_cast<std::size_t>(spec.q);
  TruncSeries g(f, T);
  for (std::size_t n = 0; n <= K; ++n) {
    FieldElem acc = h.coeff(n);
    for (std::size_t m = 0; m < n; ++m)
      if (!g[m].is_zero()) acc -= g[m] * mpq_class(frobenius_power_coeff(spec, m, n));
    g.set(n, acc * mpq_class(1, pow_mpz(spec.p, n)));
  }
  TruncSeries back = phi_apply(g, spec, T);
  for (std::size_t n = 0; n <= T; ++n)
    if (!(back[n] == h.coeff(n)))
      throw NotInImage("series is not phi of a polynomial: mismatch at degree " + std::to_string(n));
  return g;
}

}  // namespace ltf
