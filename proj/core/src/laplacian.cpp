#include "gono/laplacian.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace gono {

Matrix128 laplacian(const Multigraph& g) {
    int n = g.vertex_count();
    Matrix128 m(size_t(n), std::vector<int128>(size_t(n), 0));
    for (int v = 0; v < n; ++v) m[size_t(v)][size_t(v)] = g.valence(v);
    for (const Edge& e : g.edges()) {
        m[size_t(e.u)][size_t(e.v)] = -int128(e.multiplicity);
        m[size_t(e.v)][size_t(e.u)] = -int128(e.multiplicity);
    }
    return m;
}

int128 det_bareiss(Matrix128 m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw precondition_error("det: matrix must be square");
    if (n == 0) return 1;

    int sign = 1;
    int128 prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                int128 num = checked_sub(checked_mul(m[k][k], m[i][j]),
                                         checked_mul(m[i][k], m[k][j]));
                m[i][j] = num / prev;             // exact by Sylvester's identity
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

// Reduced Laplacian: row and column 0 deleted, indexed by v_1..v_n.
Matrix128 reduced_laplacian(const Multigraph& g) {
    Matrix128 full = laplacian(g);
    size_t n = full.size();
    Matrix128 red(n - 1, std::vector<int128>(n - 1));
    for (size_t i = 1; i < n; ++i)
        for (size_t j = 1; j < n; ++j) red[i - 1][j - 1] = full[i][j];
    return red;
}

} // namespace

int128 spanning_tree_count(const Multigraph& g) {
    g.require_connected("spanning_tree_count");
    return det_bareiss(reduced_laplacian(g));
}

int128 two_forest_count(const Multigraph& g, int i, int j) {
    g.require_connected("two_forest_count");
    g.require_vertex(i, "two_forest_count");
    g.require_vertex(j, "two_forest_count");
    if (i == 0 || j == 0) return 0;               // no 2-forest separates v_0 from itself

    Matrix128 red = reduced_laplacian(g);
    size_t n = red.size();
    Matrix128 minor(n - 1, std::vector<int128>(n - 1));
    for (size_t r = 0, mr = 0; r < n; ++r) {
        if (r == size_t(i - 1)) continue;
        for (size_t c = 0, mc = 0; c < n; ++c) {
            if (c == size_t(j - 1)) continue;
            minor[mr][mc++] = red[r][c];
        }
        ++mr;
    }
    int128 d = det_bareiss(std::move(minor));
    return (i + j) % 2 == 0 ? d : -d;
}

int128 forest_count_oracle(const Multigraph& g, int i, int j) {
    g.require_connected("forest_count_oracle");
    g.require_vertex(i, "forest_count_oracle");
    g.require_vertex(j, "forest_count_oracle");
    int n = g.vertex_count();
    if (n > 12) throw limit_error("forest_count_oracle: capped at 12 vertices");
    if (i == 0 || j == 0) return 0;

    // Expand multiplicities: parallel strands are distinct edges for counting.
    std::vector<std::pair<int, int>> strands;
    for (const Edge& e : g.edges())
        for (long long t = 0; t < e.multiplicity; ++t) strands.push_back({e.u, e.v});
    if (strands.size() > 64) throw limit_error("forest_count_oracle: capped at 64 edges");

    int want = n - 2;                             // spanning 2-forest edge count
    int total = int(strands.size());
    if (want < 0 || want > total) return 0;

    std::vector<int> parent(size_t(n), 0);
    auto root = [&](int x) {
        while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
        return x;
    };

    int128 count = 0;
    std::vector<int> pick(size_t(want), 0);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::iota(parent.begin(), parent.end(), 0);
        bool acyclic = true;
        for (int idx : pick) {
            int a = root(strands[size_t(idx)].first), b = root(strands[size_t(idx)].second);
            if (a == b) {
                acyclic = false;
                break;
            }
            parent[size_t(a)] = b;
        }
        // n-2 acyclic edges leave exactly two components; keep those splitting v_0 | v_i, v_j.
        if (acyclic && root(0) != root(i) && root(i) == root(j)) ++count;

        int pos = want - 1;
        while (pos >= 0 && pick[size_t(pos)] == total - want + pos) --pos;
        if (pos < 0) break;
        ++pick[size_t(pos)];
        for (int t = pos + 1; t < want; ++t) pick[size_t(t)] = pick[size_t(t - 1)] + 1;
    }
    return count;
}

namespace {

int mis_search(const std::vector<std::uint32_t>& adj, std::uint32_t cand) {
    if (cand == 0) return 0;
    int v = std::countr_zero(cand);
    std::uint32_t rest = cand & ~(std::uint32_t(1) << v);
    std::uint32_t nb = adj[size_t(v)] & cand;
    if (nb == 0) return 1 + mis_search(adj, rest); // isolated in cand: always take it
    int best = 1 + mis_search(adj, rest & ~adj[size_t(v)]);
    int without = mis_search(adj, rest);
    return std::max(best, without);
}

} // namespace

int independence_number(const Multigraph& g) {
    int n = g.vertex_count();
    if (n > 24) throw limit_error("independence_number: capped at 24 vertices");
    std::vector<std::uint32_t> adj(size_t(n), 0);
    for (const Edge& e : g.edges()) {
        adj[size_t(e.u)] |= std::uint32_t(1) << e.v;
        adj[size_t(e.v)] |= std::uint32_t(1) << e.u;
    }
    return mis_search(adj, (std::uint32_t(1) << n) - 1);
}

} // namespace gono
