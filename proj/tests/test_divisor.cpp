#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gono/divisor.hpp"
#include "gono/errors.hpp"
#include "gono/laplacian.hpp"
#include "gono/multigraph.hpp"

using gono::Divisor;
using gono::Multigraph;

namespace {

// D - Laplacian * x, computed straight from the definition.
Divisor fire_by_vector(const Multigraph& g, const Divisor& d,
                       const std::vector<long long>& x) {
    gono::Matrix128 lap = gono::laplacian(g);
    Divisor out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        gono::int128 flow = 0;
        for (int w = 0; w < g.vertex_count(); ++w)
            flow += lap[size_t(v)][size_t(w)] * gono::int128(x[size_t(w)]);
        out[v] = d[v] - (long long)flow;
    }
    return out;
}

Divisor canonical_divisor(const Multigraph& g) {
    Divisor k(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) k[v] = g.valence(v) - 2;
    return k;
}

} // namespace

TEST_CASE("divisor parsing and printing") {
    Divisor d = Divisor::parse("3@0, 2@1", 4);
    CHECK(d[0] == 3);
    CHECK(d[1] == 2);
    CHECK(d.degree() == 5);
    CHECK(d.to_string() == "3@0,2@1");

    CHECK(Divisor::parse("0", 3).to_string() == "0");
    CHECK(Divisor::parse("1@2,1@2", 3)[2] == 2);       // accumulates
    CHECK(Divisor::parse("-1@0,2@1", 3).to_string() == "-1@0,2@1");

    CHECK_THROWS_AS(Divisor::parse("2@", 3), gono::precondition_error);
    CHECK_THROWS_AS(Divisor::parse("x@1", 3), gono::precondition_error);
    CHECK_THROWS_AS(Divisor::parse("1@1x", 3), gono::precondition_error);
    CHECK_THROWS_AS(Divisor::parse("1@5", 3), gono::precondition_error);
    CHECK_THROWS_AS(Divisor::parse("", 3), gono::precondition_error);
}

TEST_CASE("effectiveness") {
    Divisor d = Divisor::parse("2@0,-1@2", 4);
    CHECK_FALSE(d.effective());
    CHECK_FALSE(d.effective_off(1));
    CHECK(d.effective_off(2));
    CHECK(Divisor::parse("1@1", 4).effective());
}

TEST_CASE("dhar burning") {
    Multigraph g = gono::strip(8);
    CHECK(gono::dhar_burn(g, Divisor::parse("2@0,2@2", 9), 8) == std::vector<int>{0});
    CHECK(gono::dhar_burn(g, Divisor::parse("3@4,1@5", 9), 8).empty());
    CHECK_THROWS_AS(gono::dhar_burn(g, Divisor::parse("-1@0", 9), 8),
                    gono::precondition_error);
}

TEST_CASE("pinned reductions with exact certificates") {
    Multigraph g = gono::strip(8);
    struct Trace {
        const char* in;
        const char* out;
    };
    const Trace traces[] = {
        {"2@0,2@2", "3@4,1@5"},
        {"2@0,1@2,1@4", "1@3,2@5,1@6"},
        {"2@0,1@2,1@6", "2@3,1@4,1@6"},
    };
    for (const Trace& t : traces) {
        Divisor d = Divisor::parse(t.in, 9);
        gono::ReducedDivisor red = gono::q_reduce(g, d, 8);
        CAPTURE(t.in);
        CHECK(red.divisor.to_string() == t.out);
        CHECK(fire_by_vector(g, d, red.certificate.firings) == red.divisor);
        CHECK(gono::is_q_reduced(g, red.divisor, 8));

        gono::ReducedDivisor again = gono::q_reduce(g, red.divisor, 8);
        CHECK(again.divisor == red.divisor);
        for (long long f : again.certificate.firings) CHECK(f == 0);
    }
    CHECK(gono::q_reduce(g, Divisor::parse("2@0,2@2", 9), 8)
              .certificate.firings ==
          std::vector<long long>{3, 2, 2, 1, 0, 0, 0, 0, 0});
}

TEST_CASE("reduction is a class invariant") {
    std::mt19937_64 rng(23);
    for (const Multigraph& g : {gono::strip(5), gono::fan(5)}) {
        int n = g.vertex_count();
        for (int trial = 0; trial < 40; ++trial) {
            Divisor d(n);
            for (int v = 0; v < n; ++v) d[v] = (long long)(rng() % 9) - 3;
            std::vector<long long> x(size_t(n), 0);
            for (int v = 0; v < n; ++v) x[size_t(v)] = (long long)(rng() % 7) - 3;
            Divisor shifted = fire_by_vector(g, d, x);
            int q = int(rng() % std::uint64_t(n));
            gono::ReducedDivisor a = gono::q_reduce(g, d, q);
            gono::ReducedDivisor b = gono::q_reduce(g, shifted, q);
            CHECK(a.divisor == b.divisor);
            CHECK(fire_by_vector(g, d, a.certificate.firings) == a.divisor);
            CHECK(fire_by_vector(g, shifted, b.certificate.firings) == b.divisor);
        }
    }
}

TEST_CASE("rank ground cases") {
    Multigraph g = gono::strip(3);
    CHECK(gono::rank(g, Divisor::parse("-1@0", 4)) == -1);
    CHECK(gono::rank(g, Divisor(4)) == 0);

    // Trees: rank equals degree for nonnegative degree. The default search cap
    // is 2g+2 = 2 here, so larger degrees need an explicit one.
    Multigraph path = gono::strip(1);
    for (int d = 0; d <= 4; ++d) {
        Divisor dv(2);
        dv[1] = d;
        CHECK(gono::rank(path, dv, 8) == d);
    }

    CHECK_THROWS_AS(gono::rank(g, Divisor::parse("99@0", 4), 10), gono::limit_error);
}

TEST_CASE("rank satisfies the degree-genus identity") {
    std::mt19937_64 rng(31);
    std::vector<Multigraph> graphs;
    for (int n = 2; n <= 5; ++n) {
        graphs.push_back(gono::strip(n));
        graphs.push_back(gono::fan(n));
    }
    graphs.push_back(gono::strip(6));
    for (const Multigraph& g : graphs) {
        int n = g.vertex_count();
        long long genus = g.genus();
        Divisor k = canonical_divisor(g);
        int trials = n <= 6 ? 12 : 4;
        for (int t = 0; t < trials; ++t) {
            Divisor d(n);
            long long target = (long long)(rng() % std::uint64_t(2 * genus + 5)) - 2;
            for (int v = 0; v < n; ++v) d[v] = (long long)(rng() % 5) - 1;
            d[int(rng() % std::uint64_t(n))] += target - d.degree();
            int rd = gono::rank(g, d);
            int rkd = gono::rank(g, k - d);
            CAPTURE(d.to_string());
            CHECK(rd - rkd == d.degree() + 1 - genus);
        }
    }
}

TEST_CASE("pinned ranks") {
    for (int n = 8; n <= 10; ++n)
        CHECK(gono::rank(gono::strip(n), Divisor::parse("3@0,2@1", n + 1)) == 1);
    Multigraph s7 = gono::strip(7);
    CHECK(gono::rank(s7, Divisor::parse("2@3,2@4", 8)) == 1);
    CHECK(gono::rank(s7, Divisor::parse("2@4,2@5", 8)) == 0);
}

TEST_CASE("divisor-search gonality") {
    int strip_gon[] = {1, 1, 2, 2, 3, 3, 4, 4, 5};
    for (int n = 0; n <= 8; ++n) {
        gono::DharGonality out = gono::gonality_dhar(gono::strip(n), 1);
        CAPTURE(n);
        CHECK(out.degree == strip_gon[n]);
        CHECK(out.witness.degree() == out.degree);
        CHECK(gono::rank(gono::strip(n), out.witness) >= 1);
    }
    int fan_gon[] = {1, 2, 2, 3, 3, 4, 4, 4};
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(gono::gonality_dhar(gono::fan(n), 1).degree == fan_gon[n - 1]);
    }

    gono::DharGonality r2 = gono::gonality_dhar(gono::strip(3), 2);
    CHECK(r2.degree >= gono::gonality_dhar(gono::strip(3), 1).degree);
    CHECK(gono::rank(gono::strip(3), r2.witness) >= 2);

    CHECK_THROWS_AS(gono::gonality_dhar(gono::strip(5), 1, 1), gono::limit_error);
}

TEST_CASE("multiplicity-free gonality") {
    int strip_mf[] = {2, 2, 3, 4, 4, 5, 6};
    int fan_mf[] = {2, 2, 3, 3, 4, 4, 5};
    for (int n = 2; n <= 8; ++n) {
        gono::DharGonality s = gono::mfgon(gono::strip(n));
        gono::DharGonality f = gono::mfgon(gono::fan(n));
        CAPTURE(n);
        CHECK(s.degree == strip_mf[n - 2]);
        CHECK(f.degree == fan_mf[n - 2]);
        for (int v = 0; v < n + 1; ++v) {
            CHECK(s.witness[v] >= 0);
            CHECK(s.witness[v] <= 1);
        }
        CHECK(gono::rank(gono::strip(n), s.witness) >= 1);
    }
}
