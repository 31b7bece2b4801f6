#include "ltf/intpoly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ltf/arith.hpp"
#include "ltf/errors.hpp"
#include "ltf/pnmatrix.hpp"
#include "parallel.hpp"

namespace ltf {

namespace {

constexpr std::uint64_t kMaxTransversal = std::uint64_t{1} << 24;

// Candidate c in [0, q^P) has base-q digits c_0, c_1, ...; digit c_i is the residue-field
// coefficient of pi^i. Two candidates differ in valuation by their common low digits.
int common_low_digits(std::uint64_t a, std::uint64_t b, std::uint64_t q, int P) {
  int v = 0;
  while (v < P && a % q == b % q) {
    a /= q;
    b /= q;
    ++v;
  }
  return v;
}

// Integer coordinates of candidate c in the basis of spec.ring_field().
std::vector<std::int64_t> candidate_coords(const ExtensionSpec& spec, std::uint64_t c, int P) {
  const int n = spec.ring_field().degree();
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
  const auto q = static_cast<std::uint64_t>(spec.q);
  for (int i = 0; i < P; ++i, c /= q) {
    std::uint64_t digit = c % q;
    if (spec.kind == ExtKind::ramified) {
      out[static_cast<std::size_t>(i % n)] += static_cast<std::int64_t>(digit) * checked_pow(spec.p, static_cast<unsigned>(i / n));
    } else {
      const std::int64_t scale = checked_pow(spec.p, static_cast<unsigned>(i));
      for (int j = 0; j < n; ++j, digit /= static_cast<std::uint64_t>(spec.p))
        out[static_cast<std::size_t>(j)] += static_cast<std::int64_t>(digit % static_cast<std::uint64_t>(spec.p)) * scale;
    }
  }
  return out;
}

struct Best {
  std::int64_t val = std::numeric_limits<std::int64_t>::max();
  std::size_t pos = std::numeric_limits<std::size_t>::max();
};

}  // namespace

int default_ordering_precision(const ExtensionSpec& spec, std::size_t count) {
  const std::int64_t w = wq(static_cast<std::int64_t>(count), spec.q);
  int P = 1;
  while (static_cast<std::int64_t>(spec.e) * P <= w + spec.e) ++P;
  std::uint64_t size = static_cast<std::uint64_t>(spec.q);
  for (int i = 1; i < P; ++i) size *= static_cast<std::uint64_t>(spec.q);
  while (size < count) size *= static_cast<std::uint64_t>(spec.q), ++P;
  return P;
}

PiOrdering build_pi_ordering(const ExtensionSpec& spec, std::size_t count, const PiOrderingOptions& opts) {
  return build_pi_ordering(spec, count, default_ordering_precision(spec, count), opts);
}

PiOrdering build_pi_ordering(const ExtensionSpec& spec, std::size_t count, int precision,
                             const PiOrderingOptions& opts) {
  if (count < 1) throw ValidationError("pi-ordering count must be >= 1");
  if (precision < 1) throw ValidationError("pi-ordering precision must be >= 1");
  const std::int64_t w = wq(static_cast<std::int64_t>(count), spec.q);
  if (static_cast<std::int64_t>(spec.e) * precision <= w) {
    const long need = static_cast<long>(w / spec.e + 1);
    throw PrecisionError("pi-ordering precision " + std::to_string(precision) + " too small for count " +
                             std::to_string(count),
                         need);
  }
  const auto q = static_cast<std::uint64_t>(spec.q);
  std::uint64_t N = 1;
  for (int i = 0; i < precision; ++i) {
    if (N > kMaxTransversal / q)
      throw ValidationError("transversal q^" + std::to_string(precision) + " exceeds " +
                            std::to_string(kMaxTransversal) + " points");
    N *= q;
  }
  if (N < count) {
    int need = precision;
    for (std::uint64_t s = N; s < count; s *= q) ++need;
    throw PrecisionError("transversal has fewer than " + std::to_string(count) + " classes", need);
  }

  // Scan candidates in lexicographic order of their coordinate vectors.
  const std::size_t dim = static_cast<std::size_t>(spec.ring_field().degree());
  std::vector<std::int64_t> coords(N * dim);
  for (std::uint64_t c = 0; c < N; ++c) {
    const auto v = candidate_coords(spec, c, precision);
    std::copy(v.begin(), v.end(), coords.begin() + static_cast<std::ptrdiff_t>(c * dim));
  }
  auto row = [&](std::uint64_t c) { return coords.begin() + static_cast<std::ptrdiff_t>(c * dim); };
  std::vector<std::uint64_t> order(N);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
    if (opts.tie == TieOrder::reverse_lex) std::swap(a, b);
    return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(dim), row(b),
                                        row(b) + static_cast<std::ptrdiff_t>(dim));
  });

  const unsigned threads = detail::resolve_threads(opts.threads);
  const std::size_t chunks = std::min<std::size_t>(N, 64);
  const std::size_t chunk_len = (N + chunks - 1) / chunks;
  std::vector<std::int64_t> acc(N, 0);
  std::vector<bool> taken(N, false);
  std::vector<Best> partial(chunks);

  PiOrdering out;
  out.precision = precision;
  const Field& ring = spec.ring_field();
  for (std::size_t k = 0; k < count; ++k) {
    detail::parallel_for(chunks, threads, [&](std::size_t ch) {
      Best b;
      const std::size_t hi = std::min<std::size_t>(N, (ch + 1) * chunk_len);
      for (std::size_t pos = ch * chunk_len; pos < hi; ++pos)
        if (!taken[pos] && acc[pos] < b.val) b = {acc[pos], pos};
      partial[ch] = b;
    });
    Best best;
    for (const Best& b : partial)
      if (b.val < best.val) best = b;
    const std::uint64_t chosen = order[best.pos];
    taken[best.pos] = true;
    out.achieved_vals.push_back(best.val);
    std::vector<mpq_class> c(dim);
    for (std::size_t i = 0; i < dim; ++i) c[i] = mpq_class(static_cast<long>(row(chosen)[static_cast<std::ptrdiff_t>(i)]));
    out.points.push_back(ring.from_coeffs(std::move(c)));
    if (best.val != wq(static_cast<std::int64_t>(k), spec.q))
      throw ConsistencyError("PiOrdering", "achieved valuation " + std::to_string(best.val) + " at k=" +
                                               std::to_string(k) + " but w_q(k) = " +
                                               std::to_string(wq(static_cast<std::int64_t>(k), spec.q)));
    if (k + 1 == count) break;
    detail::parallel_for(chunks, threads, [&](std::size_t ch) {
      const std::size_t hi = std::min<std::size_t>(N, (ch + 1) * chunk_len);
      for (std::size_t pos = ch * chunk_len; pos < hi; ++pos)
        if (!taken[pos]) acc[pos] += common_low_digits(order[pos], chosen, q, precision);
    });
  }
  return out;
}

std::vector<PolyL> lagrange_basis(const PiOrdering& ord, std::size_t n) {
  if (ord.points.size() < n + 1) throw ValidationError("ordering has fewer than n+1 points");
  const Field& f = ord.points.front().field();
  std::vector<PolyL> out;
  PolyL prod = PolyL::constant(f.one());
  for (std::size_t k = 0; k <= n; ++k) {
    FieldElem denom = f.one();
    for (std::size_t i = 0; i < k; ++i) denom *= ord.points[k] - ord.points[i];
    out.push_back(prod * denom.inverse());
    PolyL lin(f, {-ord.points[k], f.one()});
    prod = prod * lin;
  }
  return out;
}

FieldElem to_ring(const ExtensionSpec& spec, const FieldElem& x) {
  if (&x.field() == &spec.ring_field()) return x;
  if (&x.field() != &spec.field()) throw ValidationError("element is not over the extension's field");
  if (x.field().degree() != 1) throw ValidationError("cannot embed a non-rational model");
  return spec.ring_field().from(x[0]);
}

PolyL to_ring(const ExtensionSpec& spec, const PolyL& g) {
  std::vector<FieldElem> c;
  for (const auto& x : g.coeffs()) c.push_back(to_ring(spec, x));
  return PolyL(spec.ring_field(), std::move(c));
}

IntMembership int_membership(const ExtensionSpec& spec, const PolyL& g, const PiOrdering& ord) {
  const PolyL h = to_ring(spec, g);
  IntMembership out;
  const auto deg = h.degree();
  if (!deg) return out;
  if (ord.points.size() <= *deg) throw ValidationError("ordering length must exceed deg g");
  const std::vector<PolyL> basis = lagrange_basis(ord, *deg);
  for (std::size_t t = 0; t <= *deg; ++t) {
    FieldElem lam = h(ord.points[t]);
    for (std::size_t s = 0; s < t; ++s) lam -= out.lambda[s] * basis[s](ord.points[t]);
    if (lam.valuation() < Valuation(0)) out.member = false;
    out.lambda.push_back(std::move(lam));
  }
  return out;
}

PolyL sigma_poly_interpolated(const ExtensionSpec& spec, std::size_t i, std::size_t j) {
  const Field& f = spec.field();
  PolyL out(f);
  for (std::size_t a = 0; a <= j; ++a) {
    const FieldElem v = sigma_eval(spec, i, j, static_cast<std::int64_t>(a), std::max<std::size_t>(j, 1));
    if (v.is_zero()) continue;
    PolyL term = PolyL::constant(v);
    mpq_class denom = 1;
    for (std::size_t b = 0; b <= j; ++b) {
      if (b == a) continue;
      term = term * PolyL(f, {f.from(mpq_class(-static_cast<long>(b))), f.one()});
      denom *= static_cast<long>(a) - static_cast<long>(b);
    }
    out += term * f.from(1 / denom);
  }
  return out;
}

}  // namespace ltf
