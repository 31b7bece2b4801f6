#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltf/extension.hpp"

namespace ltf {

// Polynomial in one indeterminate with coefficients in a Field; never stores a zero leading coefficient.
class PolyL {
 public:
  explicit PolyL(const Field& f) : f_(&f) {}
  PolyL(const Field& f, std::vector<FieldElem> coeffs);
  static PolyL monomial(const FieldElem& c, std::size_t k);
  static PolyL constant(const FieldElem& c) { return monomial(c, 0); }

  const Field& field() const { return *f_; }
  bool is_zero() const { return c_.empty(); }
  // nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  FieldElem coeff(std::size_t k) const;
  FieldElem lead() const;
  const std::vector<FieldElem>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  FieldElem operator()(const FieldElem& x) const;
  // Minimal v_pi over coefficients (infinity for 0).
  Valuation min_valuation() const;
  PolyL derivative() const;
  PolyL shift(std::size_t k) const;  // times Y^k
  // f(Y) -> f(Y^k)
  PolyL inflate(std::size_t k) const;

  PolyL& operator+=(const PolyL& o);
  PolyL& operator-=(const PolyL& o);
  PolyL& operator*=(const FieldElem& s);
  friend PolyL operator+(PolyL a, const PolyL& b) { return a += b; }
  friend PolyL operator-(PolyL a, const PolyL& b) { return a -= b; }
  friend PolyL operator*(const PolyL& a, const PolyL& b);
  friend PolyL operator*(PolyL a, const FieldElem& s) { return a *= s; }
  friend PolyL operator*(const FieldElem& s, PolyL a) { return a *= s; }
  friend bool operator==(const PolyL& a, const PolyL& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

  // Add c * Y^k.
  void add_term(const FieldElem& c, std::size_t k);
  std::string to_string() const;

 private:
  void trim();
  const Field* f_;
  std::vector<FieldElem> c_;
};

}  // namespace ltf
