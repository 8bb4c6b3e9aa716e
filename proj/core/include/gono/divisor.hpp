#pragma once

#include <string>
#include <vector>

#include "gono/multigraph.hpp"

namespace gono {

// Divisor on a fixed vertex count: dense integer chip counts.
class Divisor {
public:
    explicit Divisor(int vertex_count);
    Divisor(int vertex_count, std::vector<long long> coeffs);

    // Text form "3@0,2@1": coefficient@vertex, ascending vertices, zeros omitted;
    // the zero divisor is "0".
    static Divisor parse(const std::string& text, int vertex_count);
    std::string to_string() const;

    int vertex_count() const { return int(coeffs_.size()); }
    long long operator[](int v) const { return coeffs_[size_t(v)]; }
    long long& operator[](int v) { return coeffs_[size_t(v)]; }

    long long degree() const;
    bool effective() const;
    bool effective_off(int q) const;

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    bool operator==(const Divisor&) const = default;

private:
    std::vector<long long> coeffs_;
};

// Dhar's burning algorithm from q: returns the maximal set of vertices that a fire
// starting at q cannot burn, ascending. Requires D effective off q.
std::vector<int> dhar_burn(const Multigraph& g, const Divisor& d, int q);

// Firing certificate: D' = D - Laplacian * x, exactly. For inputs already effective
// off q the vector is the pure Dhar schedule (nonnegative, zero at q).
struct FiringCertificate {
    std::vector<long long> firings;
};

struct ReducedDivisor {
    Divisor divisor;
    FiringCertificate certificate;
};

// Unique q-reduced representative of [D]. Phase 1 makes D effective off q by firing
// distance balls around q, farthest shell first; phase 2 repeatedly fires the
// unburnt set from Dhar until it is empty.
ReducedDivisor q_reduce(const Multigraph& g, const Divisor& d, int q);

bool is_q_reduced(const Multigraph& g, const Divisor& d, int q);

// Baker-Norine rank: -1 when no effective divisor is equivalent to D; otherwise the
// largest r such that D - E stays equivalent-to-effective for every effective E of
// degree r. degree_cap bounds deg D (default 2g+2); beyond it throws limit_error.
int rank(const Multigraph& g, const Divisor& d, long long degree_cap = -1);

struct DharGonality {
    int degree = 0;
    Divisor witness;
};

// Least degree of a divisor of rank >= target_rank, with the first witness found:
// enumerates q-reduced effective divisors (q = v_0) by degree, lexicographically.
DharGonality gonality_dhar(const Multigraph& g, int target_rank,
                           long long degree_cap = -1);

// Multiplicity-free gonality: least |S| over vertex subsets S whose indicator
// divisor has positive rank. Searches subsets by size then lexicographically.
DharGonality mfgon(const Multigraph& g);

} // namespace gono
