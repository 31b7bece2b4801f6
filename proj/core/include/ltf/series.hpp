#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ltf/extension.hpp"
#include "ltf/poly.hpp"

namespace ltf {

enum class Coordinate {
  ST,   // log(Z) = sum_k Z^{q^k} / pi^k
  COL,  // [p](X) = pX + X^q
};

// One-variable power series truncated at degree `bound`.
class TruncSeries {
 public:
  TruncSeries(const Field& f, std::size_t bound);
  TruncSeries(const Field& f, std::size_t bound, const std::vector<FieldElem>& coeffs);
  static TruncSeries variable(const Field& f, std::size_t bound);
  static TruncSeries from_poly(const PolyL& p, std::size_t bound);

  std::size_t bound() const { return c_.size() - 1; }
  const Field& field() const { return *f_; }
  const FieldElem& operator[](std::size_t n) const { return c_[n]; }
  FieldElem coeff(std::size_t n) const { return n < c_.size() ? c_[n] : f_->zero(); }
  void set(std::size_t n, FieldElem v);
  const std::vector<FieldElem>& coeffs() const { return c_; }
  PolyL to_poly() const { return PolyL(*f_, c_); }
  Valuation min_valuation() const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const FieldElem& s);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const FieldElem& s) { return a *= s; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

  TruncSeries pow(unsigned k) const;
  // this(inner(Z)); inner must have zero constant term.
  TruncSeries compose(const TruncSeries& inner) const;
  // Compositional inverse; needs c_0 = 0 and c_1 invertible.
  TruncSeries reversion() const;

 private:
  const Field* f_;
  std::vector<FieldElem> c_;
};

// Power series in 1..3 variables truncated at total degree `bound`, dense.
class MultiSeries {
 public:
  MultiSeries(const Field& f, int nvars, std::size_t bound);
  static MultiSeries variable(const Field& f, int nvars, std::size_t bound, int which);
  // s(x_which) viewed as a series in nvars variables.
  static MultiSeries embed(const TruncSeries& s, int nvars, int which);

  int nvars() const { return nvars_; }
  std::size_t bound() const { return bound_; }
  const Field& field() const { return *f_; }
  std::size_t size() const { return c_.size(); }
  const std::array<int, 3>& exponent(std::size_t idx) const { return exps_[idx]; }
  // Coefficient of x^i y^j z^k.
  FieldElem coeff(int i, int j = 0, int k = 0) const;
  void set(int i, int j, int k, FieldElem v);
  const FieldElem& at(std::size_t idx) const { return c_[idx]; }
  Valuation min_valuation() const;

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  MultiSeries& operator*=(const FieldElem& s);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  friend bool operator==(const MultiSeries& a, const MultiSeries& b) { return a.c_ == b.c_; }

  // f(this) for a one-variable f; this must have zero constant term.
  MultiSeries apply(const TruncSeries& f) const;
  // Bivariate this(u, v); u, v share a variable count and have zero constant terms.
  MultiSeries substitute(const MultiSeries& u, const MultiSeries& v) const;

 private:
  int index(int i, int j, int k) const;
  std::size_t position(int i, int j, int k) const;
  const Field* f_;
  int nvars_;
  std::size_t bound_;
  std::vector<std::array<int, 3>> exps_;
  std::vector<int> lookup_;  // dense (bound+1)^nvars table of indices, -1 outside
  std::vector<FieldElem> c_;
};

using BiSeries = MultiSeries;

TruncSeries log_lt(const ExtensionSpec& spec, Coordinate coord, std::size_t T);
TruncSeries exp_lt(const ExtensionSpec& spec, Coordinate coord, std::size_t T);
// F(X, Y) = exp(log X + log Y); throws ConsistencyError on a non-integral coefficient.
BiSeries group_law(const ExtensionSpec& spec, Coordinate coord, std::size_t T);
// [a](Z) = exp(a log Z).
TruncSeries mult_by(const ExtensionSpec& spec, Coordinate coord, std::int64_t a, std::size_t T);

// [p](X) = pX + X^q in the COL coordinate, truncated at T.
TruncSeries frobenius_col(const ExtensionSpec& spec, std::size_t T);
// [X^n] (pX + X^q)^m, zero unless (n - m) is a nonnegative multiple of q - 1.
mpz_class frobenius_power_coeff(const ExtensionSpec& spec, std::size_t m, std::size_t n);

// phi(f)(X) = f(pX + X^q).
TruncSeries phi_apply(const TruncSeries& f, const ExtensionSpec& spec, std::size_t T);
// Polynomial g of degree <= T/q with phi(g) = h up to degree T; NotInImage otherwise.
TruncSeries phi_unapply(const TruncSeries& h, const ExtensionSpec& spec, std::size_t T);

}  // namespace ltf
