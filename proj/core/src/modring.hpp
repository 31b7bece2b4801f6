#pragma once

// Fixed-width arithmetic in Z/p^m used by the fast span engine.
// Odd p: Montgomery form with R = 2^(64L). p = 2: plain residues masked to m bits.

#include <gmpxx.h>

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace ltf::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

template <int L>
struct Nat {
  u64 w[L];
};

inline u64 inverse_mod_2_64(u64 a) {
  u64 x = a;  // correct to 3 bits for odd a
  for (int i = 0; i < 6; ++i) x *= 2 - a * x;
  return x;
}

// 192-bit column accumulator for product scanning.
struct Acc {
  u128 v = 0;
  u64 ext = 0;
  [[gnu::always_inline]] inline void add(u128 x) {
    v += x;
    ext += v < x;
  }
  [[gnu::always_inline]] inline u64 low() const { return static_cast<u64>(v); }
  // Return the low limb and shift right by 64 bits.
  [[gnu::always_inline]] inline u64 shift() {
    u64 lo = static_cast<u64>(v);
    v = (v >> 64) | (u128(ext) << 64);
    ext = 0;
    return lo;
  }
};

template <int L, bool Pow2>
class ModPm {
 public:
  using E = Nat<L>;
  struct Wide {
    u64 w[2 * L + 1];
  };

  // `terms`: most products summed into one accumulator before reduce().
  ModPm(u64 p, unsigned m, unsigned terms = 1) : p_(p), m_(m) {
    mpz_class n = 1;
    for (unsigned i = 0; i < m; ++i) n *= static_cast<unsigned long>(p);
    if (bits_needed(n, terms) > 64u * L) throw std::logic_error("modulus too wide for limb count");
    n_ = export_nat(n);
    if constexpr (Pow2) {
      top_mask_ = m % 64 == 0 ? ~u64(0) : (u64(1) << (m % 64)) - 1;
      top_limb_ = (m + 63) / 64 - 1;
    } else {
      n0inv_ = -inverse_mod_2_64(n_.w[0]);
      mpz_class r = 1;
      r <<= 64 * L;
      r2_ = export_nat((r * r) % n);
      one_ = export_nat(r % n);
      // Largest power of p fitting in 63 bits, for chunked valuations.
      chunk_pow_ = 1;
      chunk_exp_ = 0;
      while (chunk_pow_ <= (u64(1) << 62) / p) chunk_pow_ *= p, ++chunk_exp_;
      mpz_class pw = 1;
      for (int i = 0; i < L; ++i) {
        limb_mod_chunk_[i] = static_cast<u64>(mpz_class(pw % static_cast<unsigned long>(chunk_pow_)).get_ui());
        pw <<= 64;
      }
    }
    p_rep_.resize(m + 1);
    mpz_class pk = 1;
    for (unsigned k = 0; k <= m; ++k, pk *= static_cast<unsigned long>(p)) p_rep_[k] = from_mpz(pk);
  }

  // Width R = 2^(64L) must exceed terms * N, so reductions of sums of `terms` products stay below 2N.
  static std::size_t bits_needed(const mpz_class& n, unsigned terms) {
    std::size_t extra = 0;
    while ((1u << extra) < terms) ++extra;
    return mpz_sizeinbase(n.get_mpz_t(), 2) + extra;
  }

  u64 p() const { return p_; }
  unsigned m() const { return m_; }

  static E zero() {
    E r;
    std::memset(r.w, 0, sizeof r.w);
    return r;
  }
  static bool is_zero(const E& a) {
    u64 acc = 0;
    for (int i = 0; i < L; ++i) acc |= a.w[i];
    return acc == 0;
  }
  E one() const {
    if constexpr (Pow2) return p_rep_[0];
    else return one_;
  }
  E p_power(unsigned k) const { return k > m_ ? zero() : p_rep_[k]; }

  E from_mpz(const mpz_class& x) const {
    mpz_class n = import_nat(n_);
    mpz_class r = x % n;
    if (r < 0) r += n;
    E plain = export_nat(r);
    if constexpr (Pow2) return plain;
    else return mul(plain, r2_);
  }

  mpz_class to_mpz(const E& a) const {
    if constexpr (Pow2) return import_nat(a);
    else {
      Wide t{};
      for (int i = 0; i < L; ++i) t.w[i] = a.w[i];
      return import_nat(redc(t));
    }
  }

  [[gnu::always_inline]] inline void add(E& r, const E& a, const E& b) const {
    u64 carry = 0;
    for (int i = 0; i < L; ++i) {
      u128 s = u128(a.w[i]) + b.w[i] + carry;
      r.w[i] = static_cast<u64>(s);
      carry = static_cast<u64>(s >> 64);
    }
    if constexpr (Pow2) {
      mask(r);
    } else {
      if (carry || !less(r, n_)) sub_raw(r, n_);
    }
  }

  [[gnu::always_inline]] inline void sub(E& r, const E& a, const E& b) const {
    u64 borrow = 0;
    for (int i = 0; i < L; ++i) {
      u128 d = u128(a.w[i]) - b.w[i] - borrow;
      r.w[i] = static_cast<u64>(d);
      borrow = static_cast<u64>(d >> 64) & 1;
    }
    if constexpr (Pow2) {
      mask(r);
    } else {
      if (borrow) add_raw(r, n_);
    }
  }

  E neg(const E& a) const {
    E r;
    sub(r, zero(), a);
    return r;
  }

  static void clear(Wide& t) { std::memset(t.w, 0, sizeof t.w); }

  // t += a * b
  static void mul_acc(Wide& t, const E& a, const E& b) {
    for (int i = 0; i < L; ++i) {
      if constexpr (Pow2) {
        u64 carry = 0;
        for (int j = 0; i + j < L; ++j) {
          u128 s = u128(a.w[i]) * b.w[j] + t.w[i + j] + carry;
          t.w[i + j] = static_cast<u64>(s);
          carry = static_cast<u64>(s >> 64);
        }
      } else {
        u64 carry = 0;
        for (int j = 0; j < L; ++j) {
          u128 s = u128(a.w[i]) * b.w[j] + t.w[i + j] + carry;
          t.w[i + j] = static_cast<u64>(s);
          carry = static_cast<u64>(s >> 64);
        }
        for (int k = i + L; carry && k < 2 * L + 1; ++k) {
          u128 s = u128(t.w[k]) + carry;
          t.w[k] = static_cast<u64>(s);
          carry = static_cast<u64>(s >> 64);
        }
      }
    }
  }

  // Reduce an accumulator of products (bounded by 4 N^2 when odd) to a residue.
  E reduce(Wide& t) const {
    if constexpr (Pow2) {
      E r;
      for (int i = 0; i < L; ++i) r.w[i] = t.w[i];
      mask(r);
      return r;
    } else {
      return redc(t);
    }
  }

  E mul(const E& a, const E& b) const { return mul_fast(a, b); }

  // a0*b0 + a1*b1 (+ ...) with one reduction, operands given as K pairs.
  template <int K>
  [[gnu::always_inline]] inline E dot(const E* const (&a)[K], const E* const (&b)[K]) const {
    E r;
    if constexpr (Pow2) {
      Acc acc;
#pragma GCC unroll 16
      for (int col = 0; col < L; ++col) {
#pragma GCC unroll 4
        for (int k = 0; k < K; ++k)
#pragma GCC unroll 16
          for (int i = 0; i <= col; ++i) acc.add(u128(a[k]->w[i]) * b[k]->w[col - i]);
        r.w[col] = acc.shift();
      }
      mask(r);
    } else {
      // Product scanning with interleaved Montgomery reduction.
      u64 mq[L];
      Acc acc;
#pragma GCC unroll 16
      for (int col = 0; col < L; ++col) {
#pragma GCC unroll 4
        for (int k = 0; k < K; ++k)
#pragma GCC unroll 16
          for (int i = 0; i <= col; ++i) acc.add(u128(a[k]->w[i]) * b[k]->w[col - i]);
#pragma GCC unroll 16
        for (int j = 0; j < col; ++j) acc.add(u128(mq[j]) * n_.w[col - j]);
        mq[col] = acc.low() * n0inv_;
        acc.add(u128(mq[col]) * n_.w[0]);
        acc.shift();
      }
#pragma GCC unroll 16
      for (int col = L; col < 2 * L; ++col) {
#pragma GCC unroll 4
        for (int k = 0; k < K; ++k)
#pragma GCC unroll 16
          for (int i = col - L + 1; i < L; ++i) acc.add(u128(a[k]->w[i]) * b[k]->w[col - i]);
#pragma GCC unroll 16
        for (int j = col - L + 1; j < L; ++j) acc.add(u128(mq[j]) * n_.w[col - j]);
        r.w[col - L] = acc.shift();
      }
      // Result < (K + 1) N; at most K subtractions, usually none.
      u64 top = acc.low();
      while (top || !less(r, n_)) {
        u64 borrow = 0;
#pragma GCC unroll 16
        for (int i = 0; i < L; ++i) {
          u128 d = u128(r.w[i]) - n_.w[i] - borrow;
          r.w[i] = static_cast<u64>(d);
          borrow = static_cast<u64>(d >> 64) & 1;
        }
        top -= borrow;
      }
    }
    return r;
  }

  [[gnu::always_inline]] inline E mul_fast(const E& a, const E& b) const {
    const E* pa[1] = {&a};
    const E* pb[1] = {&b};
    return dot<1>(pa, pb);
  }

  // Conversion to and from plain residues in [0, p^m), L limbs little-endian.
  void to_plain(const E& a, u64* out) const {
    if constexpr (Pow2) {
      for (int i = 0; i < L; ++i) out[i] = a.w[i];
    } else {
      Wide t;
      clear(t);
      for (int i = 0; i < L; ++i) t.w[i] = a.w[i];
      E r = redc(t);
      for (int i = 0; i < L; ++i) out[i] = r.w[i];
    }
  }
  E from_plain(const u64* x) const {
    E r;
    for (int i = 0; i < L; ++i) r.w[i] = x[i];
    if constexpr (Pow2) return r;
    else return mul_fast(r, r2_);
  }
  const E& modulus_limbs() const { return n_; }

  // v_p of the residue; m for zero.
  unsigned vp(const E& a) const {
    if (is_zero(a)) return m_;
    if constexpr (Pow2) {
      for (int i = 0; i < L; ++i)
        if (a.w[i]) return static_cast<unsigned>(64 * i + __builtin_ctzll(a.w[i]));
      return m_;
    } else {
      // Montgomery form preserves v_p. Peel off chunk_exp_ digits at a time.
      E x = a;
      unsigned v = 0;
      for (;;) {
        u64 r = mod_chunk(x);
        if (r != 0) {
          while (r % p_ == 0) r /= p_, ++v;
          return v;
        }
        divexact_word(x, chunk_pow_);
        v += chunk_exp_;
        if (v >= m_) return m_;
      }
    }
  }

  // Exact integer division of the representative by p^k (caller guarantees divisibility
  // of the residue). The result represents a/p^k modulo p^(m-k), lifted with zero top digits.
  E div_p_pow(const E& a, unsigned k) const {
    E x = a;
    if constexpr (Pow2) {
      shift_right(x, k);
    } else {
      while (k >= chunk_exp_) {
        divexact_word(x, chunk_pow_);
        k -= chunk_exp_;
      }
      u64 d = 1;
      for (unsigned i = 0; i < k; ++i) d *= p_;
      if (d > 1) divexact_word(x, d);
    }
    return x;
  }

  E mul_p_pow(const E& a, unsigned k) const {
    if (k == 0) return a;
    if (k >= m_) return zero();
    if constexpr (Pow2) {
      E x = a;
      shift_left(x, k);
      mask(x);
      return x;
    } else {
      return mul(a, p_rep_[k]);
    }
  }

 private:
  static E export_nat(const mpz_class& x) {
    E r = zero();
    std::size_t n = mpz_size(x.get_mpz_t());
    for (std::size_t i = 0; i < n && i < static_cast<std::size_t>(L); ++i)
      r.w[i] = static_cast<u64>(mpz_getlimbn(x.get_mpz_t(), static_cast<mp_size_t>(i)));
    return r;
  }
  static mpz_class import_nat(const E& a) {
    mpz_class r;
    mpz_import(r.get_mpz_t(), L, -1, sizeof(u64), 0, 0, a.w);
    return r;
  }
  static bool less(const E& a, const E& b) {
    for (int i = L - 1; i >= 0; --i)
      if (a.w[i] != b.w[i]) return a.w[i] < b.w[i];
    return false;
  }
  static void sub_raw(E& r, const E& b) {
    u64 borrow = 0;
    for (int i = 0; i < L; ++i) {
      u128 d = u128(r.w[i]) - b.w[i] - borrow;
      r.w[i] = static_cast<u64>(d);
      borrow = static_cast<u64>(d >> 64) & 1;
    }
  }
  static void add_raw(E& r, const E& b) {
    u64 carry = 0;
    for (int i = 0; i < L; ++i) {
      u128 s = u128(r.w[i]) + b.w[i] + carry;
      r.w[i] = static_cast<u64>(s);
      carry = static_cast<u64>(s >> 64);
    }
  }
  void mask(E& r) const {
    for (int i = top_limb_ + 1; i < L; ++i) r.w[i] = 0;
    r.w[top_limb_] &= top_mask_;
  }
  static void shift_right(E& x, unsigned k) {
    unsigned limbs = k / 64, bits = k % 64;
    for (int i = 0; i < L; ++i) {
      u64 lo = i + limbs < static_cast<unsigned>(L) ? x.w[i + limbs] : 0;
      u64 hi = i + limbs + 1 < static_cast<unsigned>(L) ? x.w[i + limbs + 1] : 0;
      x.w[i] = bits ? (lo >> bits) | (hi << (64 - bits)) : lo;
    }
  }
  static void shift_left(E& x, unsigned k) {
    unsigned limbs = k / 64, bits = k % 64;
    for (int i = L - 1; i >= 0; --i) {
      u64 lo = i >= static_cast<int>(limbs) ? x.w[i - limbs] : 0;
      u64 lower = i >= static_cast<int>(limbs) + 1 ? x.w[i - limbs - 1] : 0;
      x.w[i] = bits ? (lo << bits) | (lower >> (64 - bits)) : lo;
    }
  }

  E redc(Wide& t) const {
    for (int i = 0; i < L; ++i) {
      u64 mq = t.w[i] * n0inv_;
      u64 carry = 0;
      for (int j = 0; j < L; ++j) {
        u128 s = u128(mq) * n_.w[j] + t.w[i + j] + carry;
        t.w[i + j] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
      }
      for (int k = i + L; carry && k < 2 * L + 1; ++k) {
        u128 s = u128(t.w[k]) + carry;
        t.w[k] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
      }
    }
    E r;
    for (int i = 0; i < L; ++i) r.w[i] = t.w[L + i];
    while (t.w[2 * L] || !less(r, n_)) {
      u64 borrow = 0;
      for (int i = 0; i < L; ++i) {
        u128 d = u128(r.w[i]) - n_.w[i] - borrow;
        r.w[i] = static_cast<u64>(d);
        borrow = static_cast<u64>(d >> 64) & 1;
      }
      t.w[2 * L] -= borrow;
    }
    return r;
  }

  u64 mod_chunk(const E& x) const {
    u64 acc = 0;
    for (int i = 0; i < L; ++i) {
      if (!x.w[i]) continue;
      u128 t = u128(x.w[i] % chunk_pow_) * limb_mod_chunk_[i] + acc;
      acc = static_cast<u64>(t % chunk_pow_);
    }
    return acc;
  }

  // x /= d for odd d dividing x exactly.
  static void divexact_word(E& x, u64 d) {
    const u64 dinv = inverse_mod_2_64(d);
    u64 c = 0;
    for (int i = 0; i < L; ++i) {
      u64 s = x.w[i];
      u64 b = s < c;
      u64 l = s - c;
      u64 qw = l * dinv;
      x.w[i] = qw;
      c = static_cast<u64>((u128(qw) * d) >> 64) + b;
    }
  }

  u64 p_;
  unsigned m_;
  E n_;
  u64 n0inv_ = 0;
  E r2_{};
  E one_{};
  u64 top_mask_ = 0;
  int top_limb_ = 0;
  u64 chunk_pow_ = 1;
  unsigned chunk_exp_ = 0;
  u64 limb_mod_chunk_[L]{};
  std::vector<E> p_rep_;
};

}  // namespace ltf::detail
