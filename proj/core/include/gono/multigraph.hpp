#pragma once

#include <string>
#include <vector>

#include "gono/errors.hpp"

namespace gono {

// One undirected edge bundle; u < v after normalization, multiplicity >= 1.
struct Edge {
    int u = 0;
    int v = 0;
    long long multiplicity = 1;

    bool operator==(const Edge&) const = default;
};

// Finite connected-or-not multigraph without loops. Vertex ids are 0..vertex_count-1.
// Edges are stored in canonical order (lexicographic by (u, v), parallel bundles merged),
// so equal graphs serialize to identical bytes.
class Multigraph {
public:
    Multigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

    long long multiplicity(int u, int v) const;   // 0 when non-adjacent
    long long valence(int v) const;
    long long edge_count() const;                 // with multiplicity
    bool connected() const { return connected_; }

    // First Betti number E - V + 1. Requires connectivity.
    long long genus() const;

    void require_vertex(int v, const char* what) const;
    void require_connected(const char* op) const;

private:
    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<long long>> mult_;    // dense symmetric lookup
    std::vector<long long> valence_;
    bool connected_;
};

// Strip family: vertices v_0..v_n, edges between distinct vertices at distance <= 2.
// strip(0) is the one-vertex graph.
Multigraph strip(int n);

// Fan family: path v_1 - ... - v_n plus a hub v_0 joined to every path vertex.
// Rejects n = 0 (no path to fan).
Multigraph fan(int n);

// JSON graph format: {"vertices": N, "edges": [[u, v, mult], ...]} with u < v,
// lexicographically sorted. write_graph_json emits the canonical bytes.
Multigraph read_graph_json(const std::string& text);
std::string write_graph_json(const Multigraph& g);

Multigraph read_graph_file(const std::string& path);

} // namespace gono
