#include "ltf/extension.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "ltf/arith.hpp"
#include "ltf/errors.hpp"
#include "ltf/smith.hpp"

namespace ltf {

namespace {

using Qpoly = std::vector<mpq_class>;

void trim(Qpoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder and quotient of a by nonzero b over Q.
void divmod(const Qpoly& a, const Qpoly& b, Qpoly& quo, Qpoly& rem) {
  rem = a;
  trim(rem);
  quo.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
  while (rem.size() >= b.size()) {
    std::size_t shift = rem.size() - b.size();
    mpq_class c = rem.back() / b.back();
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    trim(rem);
  }
}

Qpoly poly_sub_mul(const Qpoly& a, const Qpoly& q, const Qpoly& b) {
  Qpoly r(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
  trim(r);
  return r;
}

// Small-integer polynomials mod p, for the irreducibility search.
using Fpoly = std::vector<std::int64_t>;

bool divides_mod_p(const Fpoly& g, Fpoly a, std::int64_t p) {
  // g monic
  while (a.size() >= g.size()) {
    std::int64_t c = a.back() % p;
    std::size_t shift = a.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) a[shift + i] = ((a[shift + i] - c * g[i]) % p + p) % p;
    a.pop_back();
  }
  return std::all_of(a.begin(), a.end(), [p](std::int64_t x) { return x % p == 0; });
}

Fpoly monic_from_index(std::int64_t idx, int n, std::int64_t p) {
  Fpoly g(n + 1, 0);
  for (int i = 0; i < n; ++i, idx /= p) g[i] = idx % p;
  g[n] = 1;
  return g;
}

bool irreducible_mod_p(const Fpoly& g, std::int64_t p) {
  int n = static_cast<int>(g.size()) - 1;
  for (int k = 1; 2 * k <= n; ++k) {
    std::int64_t count = checked_pow(p, k);
    for (std::int64_t idx = 0; idx < count; ++idx)
      if (divides_mod_p(monic_from_index(idx, k, p), g, p)) return false;
  }
  return true;
}

}  // namespace

struct FieldRegistry {
  std::mutex mu;
  std::map<std::tuple<std::int64_t, int, int>, std::unique_ptr<Field>> fields;

  static FieldRegistry& get() {
    static FieldRegistry r;
    return r;
  }

  const Field& intern(std::int64_t p, int n, Field::Rule rule, std::vector<mpz_class> (*make)(std::int64_t, int)) {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, n, static_cast<int>(rule));
    auto it = fields.find(key);
    if (it == fields.end())
      it = fields.emplace(key, std::unique_ptr<Field>(new Field(p, n, rule, make(p, n)))).first;
    return *it->second;
  }
};

Field::Field(std::int64_t p, int n, Rule rule, std::vector<mpz_class> mod)
    : p_(p), n_(n), rule_(rule), mod_(std::move(mod)) {}

const Field& Field::eisenstein(std::int64_t p, int n) {
  return FieldRegistry::get().intern(p, n, Rule::eisenstein, [](std::int64_t pp, int nn) {
    std::vector<mpz_class> m(nn, 0);
    m[0] = -static_cast<long>(pp);
    return m;
  });
}

const Field& Field::unramified(std::int64_t p, int n) {
  if (n == 1) return eisenstein(p, 1);
  return FieldRegistry::get().intern(p, n, Rule::unit_basis, [](std::int64_t pp, int nn) {
    std::int64_t count = checked_pow(pp, nn);
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Fpoly g = monic_from_index(idx, nn, pp);
      if (irreducible_mod_p(g, pp)) {
        std::vector<mpz_class> m;
        for (int i = 0; i < nn; ++i) m.emplace_back(static_cast<long>(g[i]));
        return m;
      }
    }
    throw ConsistencyError("unramified", "no irreducible polynomial found");
  });
}

FieldElem Field::zero() const { return FieldElem(*this, std::vector<mpq_class>(n_, 0)); }

FieldElem Field::one() const { return from(1); }

FieldElem Field::pi() const {
  if (rule_ == Rule::eisenstein && n_ > 1) {
    std::vector<mpq_class> c(n_, 0);
    c[1] = 1;
    return FieldElem(*this, std::move(c));
  }
  return from(mpq_class(static_cast<long>(p_)));
}

FieldElem Field::from(const mpq_class& c) const {
  std::vector<mpq_class> v(n_, 0);
  v[0] = c;
  return FieldElem(*this, std::move(v));
}

FieldElem Field::from_coeffs(std::vector<mpq_class> c) const { return FieldElem(*this, std::move(c)); }

FieldElem Field::pi_power(std::int64_t k) const {
  std::int64_t n = rule_ == Rule::eisenstein ? n_ : 1;
  std::int64_t u = k >= 0 ? k / n : -((-k + n - 1) / n);
  std::int64_t t = k - u * n;
  mpq_class scale = u >= 0 ? mpq_class(pow_mpz(p_, u)) : mpq_class(1, pow_mpz(p_, -u));
  std::vector<mpq_class> c(n_, 0);
  c[t] = scale;
  return FieldElem(*this, std::move(c));
}

FieldElem::FieldElem(const Field& f, std::vector<mpq_class> coeffs) : f_(&f), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != f.degree())
    throw ValidationError("field element has " + std::to_string(c_.size()) + " coordinates, expected " +
                          std::to_string(f.degree()));
  for (auto& x : c_) {
    if (x.get_den() == 0) throw ValidationError("zero denominator");
    x.canonicalize();
  }
}

void FieldElem::check_same(const FieldElem& o) const {
  if (f_ != o.f_) throw std::logic_error("field elements from different fields");
}

bool FieldElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x == 0; });
}

bool FieldElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& x) { return x == 0; });
}

bool FieldElem::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& x) { return x == 0; });
}

Valuation FieldElem::valuation() const {
  Valuation best = Valuation::infinity();
  const bool eis = f_->rule() == Field::Rule::eisenstein;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::int64_t v = eis ? f_->degree() * vp(c_[i], f_->p()) + static_cast<std::int64_t>(i) : vp(c_[i], f_->p());
    best = std::min(best, Valuation(v));
  }
  return best;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator*=(const mpq_class& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) { return *this = *this * o; }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  a.check_same(b);
  const std::size_t n = a.c_.size();
  if (n == 1) return FieldElem(*a.f_, {a.c_[0] * b.c_[0]});
  std::vector<mpq_class> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  const auto& m = a.f_->modulus();
  for (std::size_t k = 2 * n - 2; k >= n; --k) {
    if (prod[k] == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] != 0) prod[k - n + i] -= prod[k] * m[i];
  }
  prod.resize(n);
  return FieldElem(*a.f_, std::move(prod));
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const FieldElem& a, const FieldElem& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const std::size_t n = c_.size();
  if (n == 1) return FieldElem(*f_, {1 / c_[0]});
  Qpoly r0(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) r0[i] = f_->modulus()[i];
  r0[n] = 1;
  Qpoly r1 = c_, s0{}, s1{mpq_class(1)};
  trim(r1);
  while (r1.size() > 1) {
    Qpoly quo, rem;
    divmod(r0, r1, quo, rem);
    Qpoly s2 = poly_sub_mul(s0, quo, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is now a nonzero constant and s1 * x == r1 mod M.
  std::vector<mpq_class> inv(n, 0);
  for (std::size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / r1[0];
  return FieldElem(*f_, std::move(inv));
}

std::string FieldElem::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ';';
    os << c_[i].get_num() << '/' << c_[i].get_den();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.to_string(); }

const char* to_string(ExtKind k) { return k == ExtKind::ramified ? "ram" : "unram"; }

ExtKind parse_kind(const std::string& s) {
  if (s == "ram" || s == "ramified") return ExtKind::ramified;
  if (s == "unram" || s == "unramified") return ExtKind::unramified;
  throw ValidationError("unknown extension kind '" + s + "' (expected ram or unram)");
}

std::string ExtensionSpec::label() const {
  return std::to_string(p) + "," + std::to_string(d) + "," + to_string(kind);
}

ExtensionSpec make_extension(std::int64_t p, int d, ExtKind kind) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (d < 1) throw ValidationError("degree must be >= 1");
  ExtensionSpec s;
  s.p = p;
  s.d = d;
  s.kind = kind;
  if (kind == ExtKind::ramified) {
    s.e = d;
    s.f = 1;
    s.q = p;
    s.field_degree = d;
    s.field_ = &Field::eisenstein(p, d);
    s.ring_ = s.field_;
  } else {
    s.e = 1;
    s.f = d;
    s.q = checked_pow(p, d);
    s.field_degree = 1;
    s.field_ = &Field::rational(p);
    s.ring_ = &Field::unramified(p, d);
  }
  return s;
}

FieldElem fe_mul(const FieldElem& x, const FieldElem& y, const ExtensionSpec&) { return x * y; }
FieldElem fe_inv(const FieldElem& x, const ExtensionSpec&) { return x.inverse(); }
Valuation fe_valuation(const FieldElem& x, const ExtensionSpec&) { return x.valuation(); }

std::vector<mpz_class> residue_group_closed_form(const ExtensionSpec& spec, int m) {
  if (m < 0) throw ValidationError("level must be >= 0");
  std::vector<mpz_class> out;
  if (m == 0) return out;
  int k = (m - 1) / spec.e, r = m - spec.e * k;
  if (k > 0)
    for (int i = 0; i < spec.f * (spec.e - r); ++i) out.push_back(pow_mpz(spec.p, k));
  for (int i = 0; i < spec.f * r; ++i) out.push_back(pow_mpz(spec.p, k + 1));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Z-basis coordinates of the generators of pi^m o_L inside o_L = Z[x]/(M).
IntMatrix relation_lattice(const ExtensionSpec& spec, int m) {
  const Field& f = spec.ring_field();
  const int n = f.degree();
  IntMatrix rel;
  // Multiply pi^m by x^t for t < 2n; redundancy is deliberate.
  FieldElem g = f.pi_power(m);
  FieldElem x = n > 1 ? f.from_coeffs([&] {
    std::vector<mpq_class> c(n, 0);
    c[1] = 1;
    return c;
  }())
                      : f.one();
  for (int t = 0; t < 2 * n; ++t) {
    std::vector<mpz_class> row;
    for (const auto& c : g.coeffs()) {
      if (c.get_den() != 1) throw ConsistencyError("olmodpim", "non-integral lattice generator");
      row.push_back(c.get_num());
    }
    rel.push_back(std::move(row));
    g = g * x;
  }
  return rel;
}

}  // namespace

std::vector<mpz_class> residue_group_snf(const ExtensionSpec& spec, int m) {
  if (m < 0) throw ValidationError("level must be >= 0");
  std::vector<mpz_class> out;
  for (auto& v : smith_invariants(relation_lattice(spec, m)))
    if (v != 1) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<mpz_class> residue_group_structure(const ExtensionSpec& spec, int m) {
  auto closed = residue_group_closed_form(spec, m);
  auto snf = residue_group_snf(spec, m);
  if (closed != snf)
    throw ConsistencyError("olmodpim", "closed form and Smith form disagree at m=" + std::to_string(m) +
                                           " for " + spec.label());
  return closed;
}

mpz_class order_of_one_snf(const ExtensionSpec& spec, int m) {
  IntMatrix h = hermite_rows(relation_lattice(spec, m));
  const int n = spec.ring_field().degree();
  mpz_class t = 1;
  for (int guard = 0; guard <= m + 1; ++guard, t *= static_cast<long>(spec.p)) {
    std::vector<mpz_class> v(n, 0);
    v[0] = t;
    if (in_row_lattice(h, v)) return t;
  }
  throw ConsistencyError("ordof1", "1 has no p-power order in the relation lattice");
}

mpz_class order_of_one(const ExtensionSpec& spec, int m) {
  if (m < 1) throw ValidationError("level must be >= 1");
  int k = (m - 1) / spec.e;
  mpz_class closed = pow_mpz(spec.p, k + 1);
  mpz_class oracle = order_of_one_snf(spec, m);
  if (closed != oracle)
    throw ConsistencyError("ordof1", "closed form " + closed.get_str() + " != lattice order " + oracle.get_str());
  return closed;
}

}  // namespace ltf
