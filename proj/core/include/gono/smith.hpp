#pragma once

#include <vector>

#include "gono/laplacian.hpp"

namespace gono {

// Smith normal form diagonal of an integer matrix: nonnegative, each entry dividing
// the next. Exact int128 arithmetic, min-abs pivoting to keep entries small.
std::vector<int128> smith_diagonal(Matrix128 m);

// Invariant factors of the Jacobian: Smith diagonal of the reduced Laplacian
// (row/col 0 deleted). Product equals spanning_tree_count. Requires connectivity.
std::vector<int128> smith_invariants(const Multigraph& g);

} // namespace gono
