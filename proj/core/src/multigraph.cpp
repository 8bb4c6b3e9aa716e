#include "gono/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace gono {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count) {
    if (vertex_count < 1) throw precondition_error("graph needs at least one vertex");

    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= vertex_count)
            throw precondition_error("edge endpoint out of range");
        if (e.u == e.v) throw precondition_error("loops are not supported");
        if (e.multiplicity < 1) throw precondition_error("edge multiplicity must be >= 1");
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });

    // Merge parallel bundles so the edge list is canonical.
    for (const Edge& e : edges) {
        if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
            edges_.back().multiplicity += e.multiplicity;
        else
            edges_.push_back(e);
    }

    mult_.assign(size_t(vertex_count), std::vector<long long>(size_t(vertex_count), 0));
    valence_.assign(size_t(vertex_count), 0);
    for (const Edge& e : edges_) {
        mult_[size_t(e.u)][size_t(e.v)] = e.multiplicity;
        mult_[size_t(e.v)][size_t(e.u)] = e.multiplicity;
        valence_[size_t(e.u)] += e.multiplicity;
        valence_[size_t(e.v)] += e.multiplicity;
    }

    // Connectivity is recorded at construction; operations that need it check the flag.
    std::vector<char> seen(size_t(vertex_count), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < vertex_count; ++v) {
            if (!seen[size_t(v)] && mult_[size_t(u)][size_t(v)] > 0) {
                seen[size_t(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    connected_ = reached == vertex_count;
}

long long Multigraph::multiplicity(int u, int v) const {
    require_vertex(u, "multiplicity");
    require_vertex(v, "multiplicity");
    return mult_[size_t(u)][size_t(v)];
}

long long Multigraph::valence(int v) const {
    require_vertex(v, "valence");
    return valence_[size_t(v)];
}

long long Multigraph::edge_count() const {
    long long total = 0;
    for (const Edge& e : edges_) total += e.multiplicity;
    return total;
}

long long Multigraph::genus() const {
    require_connected("genus");
    return edge_count() - vertex_count_ + 1;
}

void Multigraph::require_vertex(int v, const char* what) const {
    if (v < 0 || v >= vertex_count_)
        throw precondition_error(std::string(what) + ": vertex out of range");
}

void Multigraph::require_connected(const char* op) const {
    if (!connected_)
        throw precondition_error(std::string(op) + ": graph must be connected");
}

Multigraph strip(int n) {
    if (n < 0) throw precondition_error("strip: n must be >= 0");
    std::vector<Edge> edges;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n && j <= i + 2; ++j) edges.push_back({i, j, 1});
    return {n + 1, std::move(edges)};
}

Multigraph fan(int n) {
    if (n < 1) throw precondition_error("fan: n must be >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) edges.push_back({0, i, 1});
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, 1});
    return {n + 1, std::move(edges)};
}

Multigraph read_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw precondition_error(std::string("graph json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw precondition_error("graph json: need {\"vertices\", \"edges\"}");
    if (!j["vertices"].is_number_integer())
        throw precondition_error("graph json: vertices must be an integer");
    int n = j["vertices"].get<int>();
    std::vector<Edge> edges;
    for (const auto& row : j["edges"]) {
        if (!row.is_array() || row.size() != 3)
            throw precondition_error("graph json: each edge is [u, v, multiplicity]");
        edges.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<long long>()});
    }
    return {n, std::move(edges)};
}

std::string write_graph_json(const Multigraph& g) {
    std::ostringstream out;
    out << "{\"vertices\": " << g.vertex_count() << ", \"edges\": [";
    const auto& edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) out << ", ";
        out << '[' << edges[i].u << ", " << edges[i].v << ", " << edges[i].multiplicity << ']';
    }
    out << "]}\n";
    return out.str();
}

Multigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_graph_json(buf.str());
}

} // namespace gono
