#include "ltf/arith.hpp"

#include <deque>
#include <mutex>
#include <string>

#include "ltf/errors.hpp"

namespace ltf {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::int64_t checked_pow(std::int64_t base, unsigned e) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, base, &r))
      throw ValidationError(std::to_string(base) + "^" + std::to_string(e) + " overflows 64 bits");
  }
  return r;
}

long vp(const mpz_class& z, std::int64_t p) {
  if (z == 0) throw std::domain_error("vp(0)");
  mpz_class rest;
  mpz_class pz(static_cast<long>(p));
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

long vp(const mpq_class& x, std::int64_t p) {
  return vp(x.get_num(), p) - (x.get_den() == 1 ? 0 : vp(x.get_den(), p));
}

const mpz_class& factorial(std::size_t n) {
  static std::mutex mu;
  static std::deque<mpz_class> table{mpz_class(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  return table[n];
}

mpz_class binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class pow_mpz(std::int64_t base, unsigned long e) {
  mpz_class r;
  mpz_class b(static_cast<long>(base));
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

std::int64_t digit_sum(std::int64_t n, std::int64_t q) {
  std::int64_t s = 0;
  for (; n > 0; n /= q) s += n % q;
  return s;
}

std::int64_t wq(std::int64_t n, std::int64_t q) {
  std::int64_t by_floor = 0;
  for (std::int64_t t = n / q; t > 0; t /= q) by_floor += t;
  std::int64_t by_digits = (n - digit_sum(n, q)) / (q - 1);
  if (by_floor != by_digits)
    throw ConsistencyError("wq", "floor sum " + std::to_string(by_floor) + " != digit formula " +
                                     std::to_string(by_digits) + " at n=" + std::to_string(n));
  return by_floor;
}

}  // namespace ltf
