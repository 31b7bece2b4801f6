#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace ltf {

bool is_prime(std::int64_t n);

// base^e, throws ValidationError on int64 overflow.
std::int64_t checked_pow(std::int64_t base, unsigned e);

// p-adic valuation of a nonzero integer / rational.
long vp(const mpz_class& z, std::int64_t p);
long vp(const mpq_class& x, std::int64_t p);

// Memoized n!, shared across threads.
const mpz_class& factorial(std::size_t n);
mpz_class binomial(std::size_t n, std::size_t k);

mpz_class pow_mpz(std::int64_t base, unsigned long e);

// Base-q digit sum and Bhargava exponent w_q(n) = sum_k floor(n/q^k).
std::int64_t digit_sum(std::int64_t n, std::int64_t q);
std::int64_t wq(std::int64_t n, std::int64_t q);

}  // namespace ltf
