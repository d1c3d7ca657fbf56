#pragma once

#include <vector>

#include "fiberfan/rational.hpp"

namespace fiberfan {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

IntVector to_integers(const Vector& v);
Vector to_rationals(const IntVector& v);

/// Nonzero invariant factors d1 | d2 | ... of the Smith normal form.
IntVector smith_divisors(IntMatrix m, std::size_t cols);

/// Row-style Hermite normal form basis of the lattice spanned by the rows.
IntMatrix hermite_basis(IntMatrix rows, std::size_t cols);

/// Lattice basis (in Hermite form) of {x in Z^cols : r . x = 0 for every row r}.
IntMatrix integer_kernel(const IntMatrix& rows, std::size_t cols);

}  // namespace fiberfan
