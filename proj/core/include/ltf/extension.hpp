#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "ltf/valuation.hpp"

namespace ltf {

class FieldElem;

// A number field Q[x]/(M(x)) together with the valuation data of a prime pi.
// Instances are interned and live for the whole program, so elements can
// keep a plain pointer to their field.
class Field {
 public:
  enum class Rule {
    eisenstein,  // M = x^n - p, pi = x, v(sum c_i x^i) = min(n v_p(c_i) + i)
    unit_basis,  // M irreducible mod p, pi = p, v = min v_p(c_i)
  };

  static const Field& eisenstein(std::int64_t p, int n);
  static const Field& unramified(std::int64_t p, int n);
  static const Field& rational(std::int64_t p) { return eisenstein(p, 1); }

  int degree() const { return n_; }
  std::int64_t p() const { return p_; }
  Rule rule() const { return rule_; }
  // Valuation of p in units of v(pi).
  int e() const { return rule_ == Rule::eisenstein ? n_ : 1; }
  // Low coefficients of the monic modulus: x^n = -(m_0 + m_1 x + ... ).
  const std::vector<mpz_class>& modulus() const { return mod_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem pi() const;
  FieldElem from(const mpq_class& c) const;
  FieldElem from_coeffs(std::vector<mpq_class> c) const;
  FieldElem pi_power(std::int64_t k) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(std::int64_t p, int n, Rule rule, std::vector<mpz_class> mod);
  friend class FieldElem;
  friend struct FieldRegistry;

  std::int64_t p_;
  int n_;
  Rule rule_;
  std::vector<mpz_class> mod_;
};

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const Field& f, std::vector<mpq_class> coeffs);

  const Field& field() const { return *f_; }
  bool valid() const { return f_ != nullptr; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const;
  bool is_one() const;
  // True when the element lies in Q (all higher coordinates vanish).
  bool is_rational() const;
  Valuation valuation() const;
  FieldElem inverse() const;
  std::string to_string() const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator*=(const mpq_class& s);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(FieldElem a, const mpq_class& s) { return a *= s; }
  friend FieldElem operator*(const mpq_class& s, FieldElem a) { return a *= s; }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }
  FieldElem operator-() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  void check_same(const FieldElem& o) const;
  const Field* f_ = nullptr;
  std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

enum class ExtKind { ramified, unramified };

const char* to_string(ExtKind k);
ExtKind parse_kind(const std::string& s);

struct ExtensionSpec {
  std::int64_t p = 0;
  int d = 0;
  ExtKind kind = ExtKind::ramified;
  int e = 0;
  int f = 0;
  std::int64_t q = 0;
  int field_degree = 0;

  // Model holding all coefficients produced by the matrix pipeline.
  const Field& field() const { return *field_; }
  // Model of the whole ring of integers; differs from field() when unramified, d > 1.
  const Field& ring_field() const { return *ring_; }
  FieldElem pi() const { return field_->pi(); }
  std::string label() const;

  const Field* field_ = nullptr;
  const Field* ring_ = nullptr;
};

ExtensionSpec make_extension(std::int64_t p, int d, ExtKind kind);

FieldElem fe_mul(const FieldElem& x, const FieldElem& y, const ExtensionSpec& spec);
FieldElem fe_inv(const FieldElem& x, const ExtensionSpec& spec);
Valuation fe_valuation(const FieldElem& x, const ExtensionSpec& spec);

// Invariant factors of o_L / pi^m (nontrivial ones, ascending), from the closed
// form and from a Smith normal form of the relation lattice; the two must agree.
std::vector<mpz_class> residue_group_structure(const ExtensionSpec& spec, int m);
std::vector<mpz_class> residue_group_closed_form(const ExtensionSpec& spec, int m);
std::vector<mpz_class> residue_group_snf(const ExtensionSpec& spec, int m);

// Additive order of 1 in o_L / pi^m.
mpz_class order_of_one(const ExtensionSpec& spec, int m);
mpz_class order_of_one_snf(const ExtensionSpec& spec, int m);

}  // namespace ltf
