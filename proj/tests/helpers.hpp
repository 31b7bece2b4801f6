#pragma once

#include <gmpxx.h>

#include <random>
#include <vector>

#include "ltf/extension.hpp"
#include "ltf/poly.hpp"

namespace ltf::test {

inline ExtensionSpec ram(std::int64_t p, int d) { return make_extension(p, d, ExtKind::ramified); }
inline ExtensionSpec unram(std::int64_t p, int d) { return make_extension(p, d, ExtKind::unramified); }

inline mpq_class Q(long num, long den = 1) {
  mpq_class x(num, den);
  x.canonicalize();
  return x;
}

inline FieldElem elem(const Field& f, std::vector<mpq_class> c) { return f.from_coeffs(std::move(c)); }
inline FieldElem rat(const Field& f, long num, long den = 1) { return f.from(Q(num, den)); }

inline FieldElem random_elem(const Field& f, std::mt19937_64& rng, long range = 40) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  std::vector<mpq_class> c;
  for (int i = 0; i < f.degree(); ++i) c.push_back(Q(num(rng), den(rng)));
  return f.from_coeffs(std::move(c));
}

// Coefficients are integers in [-range, range].
inline FieldElem random_integral(const Field& f, std::mt19937_64& rng, long range = 9) {
  std::uniform_int_distribution<long> num(-range, range);
  std::vector<mpq_class> c;
  for (int i = 0; i < f.degree(); ++i) c.push_back(Q(num(rng)));
  return f.from_coeffs(std::move(c));
}

inline PolyL random_poly(const Field& f, std::mt19937_64& rng, std::size_t deg, long range = 40) {
  std::vector<FieldElem> c;
  for (std::size_t k = 0; k <= deg; ++k) c.push_back(random_elem(f, rng, range));
  return PolyL(f, std::move(c));
}

inline PolyL X(const Field& f, std::size_t k = 1) { return PolyL::monomial(f.one(), k); }

}  // namespace ltf::test
