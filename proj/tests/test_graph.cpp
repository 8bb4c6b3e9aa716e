#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gono/errors.hpp"
#include "gono/fibonacci.hpp"
#include "gono/laplacian.hpp"
#include "gono/multigraph.hpp"
#include "gono/smith.hpp"

using gono::Edge;
using gono::Multigraph;

namespace {

std::vector<std::pair<int, int>> simple_edges(const Multigraph& g) {
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

} // namespace

TEST_CASE("family generators") {
    Multigraph s3 = gono::strip(3);
    CHECK(s3.vertex_count() == 4);
    CHECK(simple_edges(s3) ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(s3.valence(0) == 2);
    CHECK(s3.valence(1) == 3);
    CHECK(s3.valence(2) == 3);
    CHECK(s3.valence(3) == 2);

    Multigraph f3 = gono::fan(3);
    CHECK(f3.vertex_count() == 4);
    CHECK(simple_edges(f3) ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(f3.valence(0) == 3);
    CHECK(f3.valence(2) == 3);

    CHECK(gono::strip(0).vertex_count() == 1);
    CHECK(gono::strip(0).edges().empty());
    CHECK(gono::strip(1).edge_count() == 1);
    CHECK_THROWS_AS(gono::fan(0), gono::precondition_error);
    CHECK_THROWS_AS(gono::strip(-1), gono::precondition_error);
}

TEST_CASE("construction canonicalizes and validates") {
    Multigraph g(2, {{1, 0, 3}, {0, 1, 2}});      // merged into one bundle
    CHECK(g.edges().size() == 1);
    CHECK(g.multiplicity(0, 1) == 5);
    CHECK(g.multiplicity(1, 0) == 5);
    CHECK(g.valence(0) == 5);
    CHECK(g.edge_count() == 5);

    CHECK_THROWS_AS(Multigraph(0, {}), gono::precondition_error);
    CHECK_THROWS_AS(Multigraph(2, {{0, 0, 1}}), gono::precondition_error);   // loop
    CHECK_THROWS_AS(Multigraph(2, {{0, 2, 1}}), gono::precondition_error);   // range
    CHECK_THROWS_AS(Multigraph(2, {{0, 1, 0}}), gono::precondition_error);   // empty bundle
}

TEST_CASE("connectivity and genus") {
    CHECK(gono::strip(5).connected());
    CHECK_FALSE(Multigraph(3, {{0, 1, 1}}).connected());
    CHECK_THROWS_AS(Multigraph(3, {{0, 1, 1}}).require_connected("test"),
                    gono::precondition_error);

    for (int n = 1; n <= 8; ++n) {
        CHECK(gono::strip(n).genus() == n - 1);
        CHECK(gono::fan(n).genus() == n - 1);
    }
    CHECK(Multigraph(2, {{0, 1, 5}}).genus() == 4);
}

TEST_CASE("graph json round trip and canonical bytes") {
    Multigraph s3 = gono::strip(3);
    std::string text = gono::write_graph_json(s3);
    CHECK(text ==
          "{\"vertices\": 4, \"edges\": "
          "[[0, 1, 1], [0, 2, 1], [1, 2, 1], [1, 3, 1], [2, 3, 1]]}\n");
    Multigraph back = gono::read_graph_json(text);
    CHECK(gono::write_graph_json(back) == text);

    // Non-canonical input normalizes.
    Multigraph g = gono::read_graph_json(
        "{\"vertices\": 3, \"edges\": [[2, 1, 1], [1, 0, 2]]}");
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.multiplicity(1, 2) == 1);

    CHECK_THROWS_AS(gono::read_graph_json("{\"edges\": []}"), gono::precondition_error);
    CHECK_THROWS_AS(gono::read_graph_json("not json"), gono::precondition_error);
    CHECK_THROWS_AS(gono::read_graph_json("{\"vertices\": 2, \"edges\": [[0]]}"),
                    gono::precondition_error);
}

TEST_CASE("laplacian entries") {
    gono::Matrix128 lap = gono::laplacian(gono::strip(3));
    CHECK(lap[0][0] == 2);
    CHECK(lap[1][1] == 3);
    CHECK(lap[2][2] == 3);
    CHECK(lap[3][3] == 2);
    CHECK(lap[0][1] == -1);
    CHECK(lap[0][3] == 0);
    for (int i = 0; i < 4; ++i) {
        gono::int128 row = 0;
        for (int j = 0; j < 4; ++j) row += lap[size_t(i)][size_t(j)];
        CHECK(row == 0);
    }
}

TEST_CASE("bareiss determinant") {
    CHECK(gono::det_bareiss({}) == 1);
    CHECK(gono::det_bareiss({{7}}) == 7);
    CHECK(gono::det_bareiss({{0, 1}, {1, 0}}) == -1);    // needs a pivot swap
    CHECK(gono::det_bareiss({{1, 2}, {2, 4}}) == 0);     // singular
    CHECK(gono::det_bareiss({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
}

TEST_CASE("spanning tree counts") {
    CHECK(gono::spanning_tree_count(gono::strip(2)) == 3);
    CHECK(gono::spanning_tree_count(gono::strip(3)) == 8);
    CHECK(gono::spanning_tree_count(gono::fan(8)) == 987);
    CHECK(gono::spanning_tree_count(Multigraph(2, {{0, 1, 5}})) == 5);
    for (int n = 1; n <= 14; ++n) {
        CHECK(gono::spanning_tree_count(gono::strip(n)) == gono::fib(2 * n));
        CHECK(gono::spanning_tree_count(gono::fan(n)) == gono::fib(2 * n));
    }
    CHECK_THROWS_AS(gono::spanning_tree_count(Multigraph(3, {{0, 1, 1}})),
                    gono::precondition_error);
}

TEST_CASE("two-forest split counts") {
    Multigraph s3 = gono::strip(3);
    CHECK(gono::two_forest_count(s3, 1, 1) == 5);
    CHECK(gono::two_forest_count(s3, 1, 2) == 3);
    CHECK(gono::two_forest_count(s3, 0, 2) == 0);
    CHECK(gono::two_forest_count(s3, 2, 0) == 0);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(gono::two_forest_count(s3, i, j) == gono::two_forest_count(s3, j, i));
}

TEST_CASE("cofactor method equals direct forest enumeration") {
    std::vector<Multigraph> graphs;
    for (int n = 1; n <= 5; ++n) {
        graphs.push_back(gono::strip(n));
        graphs.push_back(gono::fan(n));
    }
    graphs.push_back(Multigraph(2, {{0, 1, 5}}));
    graphs.push_back(Multigraph(4, {{0, 1, 2}, {0, 2, 2}, {1, 2, 2}, {1, 3, 2}, {2, 3, 2}}));
    for (const Multigraph& g : graphs)
        for (int i = 0; i < g.vertex_count(); ++i)
            for (int j = 0; j < g.vertex_count(); ++j) {
                CAPTURE(i);
                CAPTURE(j);
                CHECK(gono::two_forest_count(g, i, j) == gono::forest_count_oracle(g, i, j));
            }
}

TEST_CASE("independence numbers") {
    CHECK(gono::independence_number(gono::strip(2)) == 1);
    int strip_alpha[] = {1, 2, 2, 2, 3, 3, 3};
    int fan_alpha[] = {1, 2, 2, 3, 3, 4, 4};
    for (int n = 2; n <= 8; ++n) {
        CHECK(gono::independence_number(gono::strip(n)) == strip_alpha[n - 2]);
        CHECK(gono::independence_number(gono::fan(n)) == fan_alpha[n - 2]);
    }
}

TEST_CASE("smith normal form") {
    CHECK(gono::smith_diagonal({{2, 1}, {1, 2}}) == std::vector<gono::int128>{1, 3});
    CHECK(gono::smith_diagonal({{6, 0}, {0, 4}}) == std::vector<gono::int128>{2, 12});
    CHECK(gono::smith_diagonal({{4, 2}, {2, 4}}) == std::vector<gono::int128>{2, 6});

    CHECK(gono::smith_invariants(gono::strip(2)) == std::vector<gono::int128>{1, 3});
    CHECK(gono::smith_invariants(gono::strip(3)) == std::vector<gono::int128>{1, 1, 8});
    CHECK(gono::smith_invariants(gono::fan(5)) ==
          std::vector<gono::int128>{1, 1, 1, 1, 55});

    for (int n = 2; n <= 10; ++n) {
        for (const Multigraph& g : {gono::strip(n), gono::fan(n)}) {
            std::vector<gono::int128> inv = gono::smith_invariants(g);
            REQUIRE(int(inv.size()) == n);
            gono::int128 prod = 1;
            for (size_t t = 0; t + 1 < inv.size(); ++t) {
                CHECK(inv[t + 1] % inv[t] == 0);  // divisibility chain
                prod *= inv[t];
            }
            prod *= inv.back();
            CHECK(prod == gono::spanning_tree_count(g));
        }
    }
}
