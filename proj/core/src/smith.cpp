#include "gono/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace gono {

namespace {

int128 abs128(int128 v) { return v < 0 ? -v : v; }

} // namespace

std::vector<int128> smith_diagonal(Matrix128 m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    for (const auto& row : m)
        if (row.size() != cols) throw precondition_error("smith: ragged matrix");

    size_t t = 0;
    std::vector<int128> diag;
    while (t < rows && t < cols) {
        // Min-abs pivot keeps intermediate entries small.
        size_t pr = t, pc = t;
        int128 best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || abs128(m[i][j]) < best)) {
                    best = abs128(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(m[t], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            int128 q = m[i][t] / m[t][t];
            if (q != 0)
                for (size_t j = t; j < cols; ++j)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
            if (m[i][t] != 0) clean = false;      // remainder left; pivot will shrink
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            int128 q = m[t][j] / m[t][t];
            if (q != 0)
                for (size_t i = t; i < rows; ++i)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;                     // re-pivot on the smaller remainder
        diag.push_back(abs128(m[t][t]));
        ++t;
    }

    // Enforce the divisibility chain d_1 | d_2 | ... by gcd/lcm exchanges.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < diag.size(); ++i)
            for (size_t j = i + 1; j < diag.size(); ++j)
                if (diag[j] % diag[i] != 0) {
                    int128 g = gcd128(diag[i], diag[j]);
                    int128 l = checked_mul(diag[i] / g, diag[j]);
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

std::vector<int128> smith_invariants(const Multigraph& g) {
    g.require_connected("smith_invariants");
    Matrix128 full = laplacian(g);
    size_t n = full.size();
    Matrix128 red(n - 1, std::vector<int128>(n - 1));
    for (size_t i = 1; i < n; ++i)
        for (size_t j = 1; j < n; ++j) red[i - 1][j - 1] = full[i][j];
    return smith_diagonal(std::move(red));
}

} // namespace gono
