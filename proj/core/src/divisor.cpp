#include "gono/divisor.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>

#include "gono/int128.hpp"

namespace gono {

Divisor::Divisor(int vertex_count) {
    if (vertex_count < 1) throw precondition_error("divisor: need >= 1 vertex");
    coeffs_.assign(size_t(vertex_count), 0);
}

Divisor::Divisor(int vertex_count, std::vector<long long> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (vertex_count < 1 || coeffs_.size() != size_t(vertex_count))
        throw precondition_error("divisor: coefficient count mismatch");
}

Divisor Divisor::parse(const std::string& text, int vertex_count) {
    Divisor d(vertex_count);
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) throw precondition_error("divisor parse: empty text");
    if (trimmed == "0") return d;

    std::stringstream ss(trimmed);
    std::string term;
    while (std::getline(ss, term, ',')) {
        size_t at = term.find('@');
        if (at == std::string::npos || at == 0 || at + 1 == term.size())
            throw precondition_error("divisor parse: expected coefficient@vertex");
        long long coeff = 0;
        int vertex = 0;
        try {
            coeff = std::stoll(term.substr(0, at));
            size_t used = 0;
            vertex = std::stoi(term.substr(at + 1), &used);
            if (used != term.size() - at - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw precondition_error("divisor parse: bad term: " + term);
        }
        if (vertex < 0 || vertex >= vertex_count)
            throw precondition_error("divisor parse: vertex out of range: " + term);
        d[vertex] += coeff;
    }
    return d;
}

std::string Divisor::to_string() const {
    std::string out;
    for (int v = 0; v < vertex_count(); ++v) {
        if (coeffs_[size_t(v)] == 0) continue;
        if (!out.empty()) out += ',';
        out += std::to_string(coeffs_[size_t(v)]) + "@" + std::to_string(v);
    }
    return out.empty() ? "0" : out;
}

long long Divisor::degree() const {
    long long total = 0;
    for (long long c : coeffs_) total += c;
    return total;
}

bool Divisor::effective() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long long c) { return c >= 0; });
}

bool Divisor::effective_off(int q) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (v != q && coeffs_[size_t(v)] < 0) return false;
    return true;
}

Divisor& Divisor::operator+=(const Divisor& o) {
    if (o.vertex_count() != vertex_count())
        throw precondition_error("divisor: vertex count mismatch");
    for (size_t v = 0; v < coeffs_.size(); ++v) coeffs_[v] += o.coeffs_[v];
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    if (o.vertex_count() != vertex_count())
        throw precondition_error("divisor: vertex count mismatch");
    for (size_t v = 0; v < coeffs_.size(); ++v) coeffs_[v] -= o.coeffs_[v];
    return *this;
}

namespace {

void check_divisor_graph(const Multigraph& g, const Divisor& d, const char* op) {
    if (d.vertex_count() != g.vertex_count())
        throw precondition_error(std::string(op) + ": divisor/graph vertex count mismatch");
}

// Dhar fire propagation on raw coefficients. Returns unburnt vertices ascending.
std::vector<int> dhar_unburnt(const Multigraph& g, const std::vector<long long>& d, int q) {
    int n = g.vertex_count();
    std::vector<char> burnt(size_t(n), 0);
    std::vector<long long> heat(size_t(n), 0);    // edges into the burnt region
    std::deque<int> queue{q};
    burnt[size_t(q)] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v) {
            if (burnt[size_t(v)]) continue;
            long long m = g.multiplicity(u, v);
            if (m == 0) continue;
            heat[size_t(v)] += m;
            if (heat[size_t(v)] > d[size_t(v)]) {
                burnt[size_t(v)] = 1;
                queue.push_back(v);
            }
        }
    }
    std::vector<int> unburnt;
    for (int v = 0; v < n; ++v)
        if (!burnt[size_t(v)]) unburnt.push_back(v);
    return unburnt;
}

// Fires every vertex of S once: each v in S sends one chip per edge leaving S.
void fire_set(const Multigraph& g, std::vector<long long>& d,
              std::vector<long long>& x, const std::vector<int>& s, long long times) {
    std::vector<char> in_s(size_t(g.vertex_count()), 0);
    for (int v : s) in_s[size_t(v)] = 1;
    for (int v : s) {
        x[size_t(v)] += times;
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (in_s[size_t(w)]) continue;
            long long m = g.multiplicity(v, w);
            d[size_t(v)] -= m * times;
            d[size_t(w)] += m * times;
        }
    }
}

std::vector<int> bfs_distances(const Multigraph& g, int q) {
    int n = g.vertex_count();
    std::vector<int> dist(size_t(n), -1);
    std::deque<int> queue{q};
    dist[size_t(q)] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v)
            if (dist[size_t(v)] < 0 && g.multiplicity(u, v) > 0) {
                dist[size_t(v)] = dist[size_t(u)] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

} // namespace

std::vector<int> dhar_burn(const Multigraph& g, const Divisor& d, int q) {
    check_divisor_graph(g, d, "dhar_burn");
    g.require_vertex(q, "dhar_burn");
    g.require_connected("dhar_burn");
    if (!d.effective_off(q))
        throw precondition_error("dhar_burn: divisor must be effective off q");
    std::vector<long long> coeffs(size_t(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) coeffs[size_t(v)] = d[v];
    return dhar_unburnt(g, coeffs, q);
}

ReducedDivisor q_reduce(const Multigraph& g, const Divisor& d, int q) {
    check_divisor_graph(g, d, "q_reduce");
    g.require_vertex(q, "q_reduce");
    g.require_connected("q_reduce");

    int n = g.vertex_count();
    std::vector<long long> cur(size_t(n), 0);
    for (int v = 0; v < n; ++v) cur[size_t(v)] = d[v];
    std::vector<long long> x(size_t(n), 0);

    // Phase 1: lift negative vertices shell by shell, farthest first. Firing the
    // ball {dist < i} adds chips exactly on shell i and touches nothing farther,
    // so shells already fixed stay fixed.
    std::vector<int> dist = bfs_distances(g, q);
    int dmax = *std::max_element(dist.begin(), dist.end());
    for (int shell = dmax; shell >= 1; --shell) {
        std::vector<int> ball;
        for (int v = 0; v < n; ++v)
            if (dist[size_t(v)] < shell) ball.push_back(v);
        long long rounds = 0;
        for (int v = 0; v < n; ++v) {
            if (dist[size_t(v)] != shell || cur[size_t(v)] >= 0) continue;
            long long gain = 0;                   // chips v receives per ball firing
            for (int u : ball) gain += g.multiplicity(u, v);
            rounds = std::max(rounds, (-cur[size_t(v)] + gain - 1) / gain);
        }
        if (rounds > 0) fire_set(g, cur, x, ball, rounds);
    }

    // Phase 2: Dhar until the unburnt set is empty.
    while (true) {
        std::vector<int> unburnt = dhar_unburnt(g, cur, q);
        if (unburnt.empty()) break;
        fire_set(g, cur, x, unburnt, 1);
    }

    return {Divisor(n, std::move(cur)), FiringCertificate{std::move(x)}};
}

bool is_q_reduced(const Multigraph& g, const Divisor& d, int q) {
    check_divisor_graph(g, d, "is_q_reduced");
    g.require_vertex(q, "is_q_reduced");
    if (!d.effective_off(q)) return false;
    return dhar_burn(g, d, q).empty();
}

namespace {

// Degree cap for rank/gonality searches; the default keeps every divisor class
// below the range where rank is forced positive by degree alone.
long long effective_degree_cap(const Multigraph& g, long long requested) {
    if (requested >= 0) return requested;
    return 2 * g.genus() + 2;
}

// Enumerates effective divisors of the given degree as non-decreasing vertex
// multisets in lexicographic order, invoking fn on each; fn returns false to
// abort. Returns false on abort.
bool for_each_effective(int vertex_count, long long degree,
                        const std::function<bool(const Divisor&)>& fn) {
    if (degree == 0) return fn(Divisor(vertex_count));
    std::vector<int> slots(size_t(degree), 0);
    while (true) {
        Divisor d(vertex_count);
        for (int v : slots) ++d[v];
        if (!fn(d)) return false;

        size_t pos = slots.size();
        while (pos > 0 && slots[pos - 1] == vertex_count - 1) --pos;
        if (pos == 0) return true;
        int next = slots[pos - 1] + 1;
        for (size_t t = pos - 1; t < slots.size(); ++t) slots[t] = next;
    }
}

} // namespace

int rank(const Multigraph& g, const Divisor& d, long long degree_cap) {
    check_divisor_graph(g, d, "rank");
    g.require_connected("rank");
    long long cap = effective_degree_cap(g, degree_cap);
    if (d.degree() > cap)
        throw limit_error("rank: divisor degree above cap; raise degree_cap");
    if (d.degree() < 0) return -1;

    const int q = 0;
    ReducedDivisor base = q_reduce(g, d, q);
    if (base.divisor[q] < 0) return -1;           // not equivalent to effective

    // rank >= r iff D - E reduces effective for every effective E of degree r.
    for (long long r = 1;; ++r) {
        if (r > d.degree()) return int(d.degree());
        bool all_ok = for_each_effective(g.vertex_count(), r, [&](const Divisor& e) {
            ReducedDivisor red = q_reduce(g, base.divisor - e, q);
            return red.divisor[q] >= 0;
        });
        if (!all_ok) return int(r - 1);
    }
}

DharGonality gonality_dhar(const Multigraph& g, int target_rank, long long degree_cap) {
    g.require_connected("gonality_dhar");
    if (target_rank < 1) throw precondition_error("gonality_dhar: rank must be >= 1");
    long long cap = effective_degree_cap(g, degree_cap);

    const int q = 0;
    for (long long deg = target_rank; deg <= cap; ++deg) {
        DharGonality found{int(deg), Divisor(g.vertex_count())};
        bool hit = !for_each_effective(g.vertex_count(), deg, [&](const Divisor& d) {
            // Each divisor class has a unique q-reduced member; skipping the rest
            // prunes the search without losing classes.
            if (!is_q_reduced(g, d, q)) return true;
            if (rank(g, d, cap) >= target_rank) {
                found.witness = d;
                return false;
            }
            return true;
        });
        if (hit) return found;
    }
    throw limit_error("gonality_dhar: degree cap exhausted; raise degree_cap");
}

DharGonality mfgon(const Multigraph& g) {
    g.require_connected("mfgon");
    int n = g.vertex_count();
    if (n > 24) throw limit_error("mfgon: capped at 24 vertices");

    // Subsets by size, then lexicographic by lowest vertex; indicators are the only
    // candidates, so the search space is 2^V.
    for (int size = 1; size <= n; ++size) {
        std::vector<int> pick(size_t(size), 0);
        for (int i = 0; i < size; ++i) pick[size_t(i)] = i;
        while (true) {
            Divisor d(n);
            for (int v : pick) d[v] = 1;
            if (rank(g, d) >= 1) return {size, d};

            int pos = size - 1;
            while (pos >= 0 && pick[size_t(pos)] == n - size + pos) --pos;
            if (pos < 0) break;
            ++pick[size_t(pos)];
            for (int t = pos + 1; t < size; ++t) pick[size_t(t)] = pick[size_t(t - 1)] + 1;
        }
    }
    throw error("mfgon: no positive-rank indicator found");  // unreachable: all-ones has full degree
}

} // namespace gono
