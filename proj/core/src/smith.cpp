#include "ltf/smith.hpp"

#include <algorithm>
#include <utility>

namespace ltf {

namespace {

std::size_t cols_of(const IntMatrix& a) { return a.empty() ? 0 : a[0].size(); }

// Replace rows r1, r2 by a unimodular combination putting gcd(a[r1][c], a[r2][c]) in r1 and 0 in r2.
void combine_rows(IntMatrix& a, std::size_t r1, std::size_t r2, std::size_t c) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[r1][c].get_mpz_t(), a[r2][c].get_mpz_t());
  mpz_class u = a[r1][c] / g, v = a[r2][c] / g;
  for (std::size_t j = 0; j < a[r1].size(); ++j) {
    mpz_class x = a[r1][j], y = a[r2][j];
    a[r1][j] = s * x + t * y;
    a[r2][j] = -v * x + u * y;
  }
}

}  // namespace

std::vector<mpz_class> smith_invariants(IntMatrix a) {
  const std::size_t rows = a.size(), cols = cols_of(a);
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
      if (bi == rows) return diag;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        mpz_class qt = a[i][t] / a[t][t];
        if (qt != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= qt * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        mpz_class qt = a[t][j] / a[t][t];
        if (qt != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= qt * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

IntMatrix hermite_rows(IntMatrix a) {
  const std::size_t cols = cols_of(a);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t first = a.size();
    for (std::size_t i = r; i < a.size(); ++i)
      if (a[i][c] != 0) {
        first = i;
        break;
      }
    if (first == a.size()) continue;
    std::swap(a[r], a[first]);
    for (std::size_t i = r + 1; i < a.size(); ++i)
      if (a[i][c] != 0) combine_rows(a, r, i, c);
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class qt;
      mpz_fdiv_q(qt.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (qt != 0)
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= qt * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

bool in_row_lattice(const IntMatrix& h, std::vector<mpz_class> v) {
  for (const auto& row : h) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    if (v[c] % row[c] != 0) return false;
    mpz_class qt = v[c] / row[c];
    for (std::size_t j = c; j < v.size(); ++j) v[j] -= qt * row[j];
  }
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

}  // namespace ltf
