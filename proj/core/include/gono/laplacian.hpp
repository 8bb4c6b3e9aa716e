#pragma once

#include <vector>

#include "gono/int128.hpp"
#include "gono/multigraph.hpp"

namespace gono {

using Matrix128 = std::vector<std::vector<int128>>;

// Combinatorial Laplacian: diag(valence) - adjacency, with multiplicities.
Matrix128 laplacian(const Multigraph& g);

// Exact determinant by fraction-free Bareiss elimination with row-swap pivoting.
// Consumes its argument.
int128 det_bareiss(Matrix128 m);

// Kirchhoff count kappa(G): determinant of the Laplacian with row/col 0 deleted.
// Requires connectivity (a disconnected graph has no spanning tree to count and the
// zero answer would be indistinguishable from a miscount).
int128 spanning_tree_count(const Multigraph& g);

// All-minors count kappa_{i,j}(G): spanning 2-forests separating v_0 from {v_i, v_j}.
// Cofactor (-1)^{i+j} det of the reduced Laplacian with row i, column j deleted
// (1-based positions among v_1..v_n). Zero when i = 0 or j = 0.
int128 two_forest_count(const Multigraph& g, int i, int j);

// Independent oracle for two_forest_count: enumerates all (V-2)-edge acyclic subsets
// and counts those whose two components split v_0 from both v_i and v_j.
// Exponential; capped at 12 vertices and 64 expanded edges.
int128 forest_count_oracle(const Multigraph& g, int i, int j);

// Maximum independent set size by branch and bound. Capped at 24 vertices.
int independence_number(const Multigraph& g);

} // namespace gono
