#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ltf/extension.hpp"
#include "ltf/poly.hpp"
#include "ltf/series.hpp"

namespace ltf {

// Upper-triangular S x S matrix; entries below the diagonal are not stored.
template <class T>
class UTMatrix {
 public:
  UTMatrix(std::size_t n, const T& zero) : n_(n), zero_(zero), data_(n * (n + 1) / 2, zero) {}

  std::size_t size() const { return n_; }
  T& at(std::size_t i, std::size_t j) { return data_[offset(i, j)]; }
  const T& at(std::size_t i, std::size_t j) const { return i > j ? zero_ : data_[offset(i, j)]; }

 private:
  std::size_t offset(std::size_t i, std::size_t j) const {
    if (i > j || j >= n_) throw std::out_of_range("UTMatrix index");
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }
  std::size_t n_;
  T zero_;
  std::vector<T> data_;
};

// P_n(Y) by enumerating k-vectors with sum k_l q^l = n.
PolyL pn_poly(const ExtensionSpec& spec, std::size_t n);
// P_0..P_N from exp(Y log(Z)); checked against pn_poly.
std::vector<PolyL> pn_via_series(const ExtensionSpec& spec, std::size_t N, std::size_t T);

// D_{i,j} = i! [Y^i] P_j for 0 <= i <= j < N, via D_{i,j} = sum_r pi^{-r} D_{i-1, j-q^r}.
UTMatrix<FieldElem> d_matrix(const ExtensionSpec& spec, std::size_t N, unsigned threads = 1);

// r^{(a)}_{i,j} = D_{a+i(q-1), a+j(q-1)}.
UTMatrix<FieldElem> r_matrix(const UTMatrix<FieldElem>& D, const ExtensionSpec& spec, std::int64_t a, std::size_t S);
UTMatrix<FieldElem> r_matrix(const ExtensionSpec& spec, std::int64_t a, std::size_t S);
// Row/column index a + i(q-1).
inline std::size_t underline(const ExtensionSpec& spec, std::int64_t a, std::size_t i) {
  return static_cast<std::size_t>(a) + i * static_cast<std::size_t>(spec.q - 1);
}

// r_jj = 1, and pi^{j-i} r_ij is integral and congruent to binom(i_, j-i) mod pi^{q-1};
// throws ConsistencyError("IntegralMCs") naming the first failing entry.
void check_integral_mcs(const ExtensionSpec& spec, std::int64_t a, const UTMatrix<FieldElem>& r);

// sigma_{i,j}(a) = [Z^j] ([a](Z))^i in the ST coordinate.
FieldElem sigma_eval(const ExtensionSpec& spec, std::size_t i, std::size_t j, std::int64_t a, std::size_t T);
// ([a](Z))^i for i = 0..max_power, ST coordinate, shared truncation T.
std::vector<TruncSeries> mult_by_powers(const ExtensionSpec& spec, std::int64_t a, std::size_t max_power,
                                        std::size_t T);

}  // namespace ltf
