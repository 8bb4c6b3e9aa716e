#include "gono/jacobian.hpp"

#include "gono/laplacian.hpp"

namespace gono {

CyclicJacobian cyclic_model(const Multigraph& g) {
    g.require_connected("cyclic_model");
    int n = g.vertex_count() - 1;
    CyclicJacobian model;
    model.generator_images.assign(size_t(n) + 1, 0);
    if (n == 0) return model;                     // one vertex: trivial group

    int128 kappa = spanning_tree_count(g);
    model.modulus = kappa;
    int128 k11 = two_forest_count(g, 1, 1);
    if (gcd128(k11, kappa) != 1)
        throw precondition_error(
            "cyclic_model: [v_1 - v_0] does not present the Jacobian cyclically "
            "(gcd(kappa_{1,1}, kappa) != 1)");
    for (int j = 1; j <= n; ++j)
        model.generator_images[size_t(j)] = mod_floor(two_forest_count(g, 1, j), kappa);
    return model;
}

PairingValue pairing(const Multigraph& g, int i, int j) {
    g.require_connected("pairing");
    g.require_vertex(i, "pairing");
    g.require_vertex(j, "pairing");
    int128 kappa = spanning_tree_count(g);
    return {mod_floor(two_forest_count(g, i, j), kappa), kappa};
}

AdditiveSet additive_set(const CyclicJacobian& model) {
    if (model.modulus > AdditiveSet::kModulusCap)
        throw limit_error("additive_set: Jacobian order above the bit-set cap");
    AdditiveSet s{std::int64_t(model.modulus)};
    for (int128 img : model.generator_images) s.insert(std::int64_t(img));
    return s;
}

AdditiveSet pairing_projection(const Multigraph& g, int i) {
    g.require_connected("pairing_projection");
    g.require_vertex(i, "pairing_projection");
    int128 kappa = spanning_tree_count(g);
    if (kappa > AdditiveSet::kModulusCap)
        throw limit_error("pairing_projection: Jacobian order above the bit-set cap");
    AdditiveSet s{std::int64_t(kappa)};
    for (int j = 0; j < g.vertex_count(); ++j)
        s.insert(std::int64_t(mod_floor(two_forest_count(g, i, j), kappa)));
    return s;
}

} // namespace gono
