#pragma once

#include <vector>

#include "gono/additive_set.hpp"
#include "gono/int128.hpp"
#include "gono/multigraph.hpp"

namespace gono {

// Cyclic presentation of the Jacobian: Jac(G) = Z/MZ with [v_i - v_0] mapped to
// generator_images[i]. Exists iff gcd(kappa_{1,1}, kappa) = 1, in which case
// [v_1 - v_0] generates and images are kappa_{1,j} scaled into the model.
struct CyclicJacobian {
    int128 modulus = 1;
    std::vector<int128> generator_images;         // index 0 is always 0
};

// Throws precondition_error when the Jacobian is not presented cyclically by
// [v_1 - v_0] (gcd test above). Trees yield the trivial model M = 1.
CyclicJacobian cyclic_model(const Multigraph& g);

// Monodromy pairing <v_i - v_0, v_j - v_0> = kappa_{i,j} / kappa as a residue:
// numerator reduced into [0, kappa), denominator kappa, fraction left un-reduced.
struct PairingValue {
    int128 numerator = 0;
    int128 denominator = 1;
};

PairingValue pairing(const Multigraph& g, int i, int j);

// A(G): image of {v_i - v_0 : i = 0..n} in the cyclic model.
AdditiveSet additive_set(const CyclicJacobian& model);

// Row i of the pairing table as a residue set: { kappa_{i,j} mod kappa : j }.
// Needs no cyclicity hypothesis.
AdditiveSet pairing_projection(const Multigraph& g, int i);

} // namespace gono
