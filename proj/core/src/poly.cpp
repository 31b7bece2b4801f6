#include "ltf/poly.hpp"

#include <algorithm>

#include "ltf/errors.hpp"

namespace ltf {

PolyL::PolyL(const Field& f, std::vector<FieldElem> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

PolyL PolyL::monomial(const FieldElem& c, std::size_t k) {
  PolyL r(c.field());
  r.add_term(c, k);
  return r;
}

void PolyL::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<std::size_t> PolyL::degree() const {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

FieldElem PolyL::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : f_->zero(); }

FieldElem PolyL::lead() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return c_.back();
}

FieldElem PolyL::operator()(const FieldElem& x) const {
  FieldElem acc = f_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Valuation PolyL::min_valuation() const {
  Valuation v = Valuation::infinity();
  for (const auto& c : c_) v = std::min(v, c.valuation());
  return v;
}

PolyL PolyL::derivative() const {
  std::vector<FieldElem> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * mpq_class(static_cast<unsigned long>(k)));
  return PolyL(*f_, std::move(d));
}

PolyL PolyL::shift(std::size_t k) const {
  if (c_.empty()) return *this;
  std::vector<FieldElem> d(k, f_->zero());
  d.insert(d.end(), c_.begin(), c_.end());
  return PolyL(*f_, std::move(d));
}

PolyL PolyL::inflate(std::size_t k) const {
  if (c_.empty() || k == 1) return *this;
  std::vector<FieldElem> d((c_.size() - 1) * k + 1, f_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) d[i * k] = c_[i];
  return PolyL(*f_, std::move(d));
}

void PolyL::add_term(const FieldElem& c, std::size_t k) {
  if (&c.field() != f_) throw std::logic_error("coefficient from a different field");
  if (c.is_zero()) return;
  if (c_.size() <= k) c_.resize(k + 1, f_->zero());
  c_[k] += c;
  trim();
}

PolyL& PolyL::operator+=(const PolyL& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), f_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyL& PolyL::operator-=(const PolyL& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), f_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyL& PolyL::operator*=(const FieldElem& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c = c * s;
  return *this;
}

PolyL operator*(const PolyL& a, const PolyL& b) {
  if (a.c_.empty() || b.c_.empty()) return PolyL(*a.f_);
  std::vector<FieldElem> r(a.c_.size() + b.c_.size() - 1, a.f_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyL(*a.f_, std::move(r));
}

std::string PolyL::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += '|';
    s += c_[i].to_string();
  }
  return s;
}

}  // namespace ltf
