#pragma once

#include <gmpxx.h>

#include <vector>

namespace ltf {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Diagonal of the Smith normal form (nonzero entries only, positive, d_i | d_{i+1}).
std::vector<mpz_class> smith_invariants(IntMatrix a);

// Row-echelon Hermite form of the row lattice; zero rows dropped.
IntMatrix hermite_rows(IntMatrix a);

// Is v in the row lattice whose Hermite form is `h`?
bool in_row_lattice(const IntMatrix& h, std::vector<mpz_class> v);

}  // namespace ltf
