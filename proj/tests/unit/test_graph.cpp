#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "../oracles/brute.hpp"
#include "xpa/graph.hpp"

using namespace xpa;

namespace {

std::vector<Graph> corpus() {
    std::vector<Graph> gs;
    for (std::size_t n = 3; n <= 12; ++n) gs.push_back(cycle(n));
    for (std::size_t n = 1; n <= 8; ++n) gs.push_back(path(n));
    for (std::size_t n = 1; n <= 7; ++n) gs.push_back(complete(n));
    for (std::size_t d = 1; d <= 5; ++d) gs.push_back(hypercube(d));
    for (std::size_t n = 2; n <= 7; ++n) gs.push_back(margulis(n));
    gs.push_back(random_regular(20, 3, 7));
    return gs;
}

}  // namespace

TEST_CASE("build_graph pairs directed edges and drops loops and duplicates") {
    std::vector<DirectedEdge> one{{0, 1}};
    CHECK(build_graph(2, one).num_directed_edges() == 2);

    std::vector<DirectedEdge> messy{{0, 1}, {0, 1}, {2, 2}};
    const auto g = build_graph(3, messy);
    CHECK(g.num_directed_edges() == 2);
    CHECK_FALSE(g.has_edge(2, 2));

    std::vector<DirectedEdge> ring{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    const auto c4 = build_graph(4, ring);
    CHECK(c4.num_directed_edges() == 8);
    CHECK(c4.max_degree() == 2);
    CHECK(c4 == cycle(4));

    std::vector<DirectedEdge> bad{{0, 3}};
    CHECK_THROWS_AS(build_graph(3, bad), std::out_of_range);
}

TEST_CASE("standard generators") {
    CHECK(cycle(4).num_directed_edges() == 8);
    CHECK(complete(4).max_degree() == 3);
    CHECK(complete(4).num_directed_edges() == 12);
    CHECK(hypercube(3).size() == 8);
    CHECK(hypercube(3).max_degree() == 3);
    CHECK(path(1).num_directed_edges() == 0);
    CHECK(path(5).num_directed_edges() == 8);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
    CHECK_THROWS_AS(complete(0), std::invalid_argument);
    CHECK_THROWS_AS(hypercube(0), std::invalid_argument);
}

TEST_CASE("margulis graphs") {
    const auto m2 = margulis(2);
    CHECK(m2.size() == 4);
    CHECK(m2.max_degree() <= 8);
    CHECK(margulis(3).size() == 9);
    CHECK(margulis(3).is_connected());
    CHECK(margulis(4).size() == 16);
    for (std::size_t n = 2; n <= 9; ++n) {
        const auto g = margulis(n);
        CHECK(g.max_degree() <= 8);
        CHECK(g.is_connected());
    }
    CHECK_THROWS_AS(margulis(1), std::invalid_argument);
}

TEST_CASE("random_regular") {
    const auto c = random_regular(4, 2, 99);
    CHECK(c.num_directed_edges() == 8);
    CHECK(c.is_connected());
    CHECK(random_regular(6, 3, 1) == random_regular(6, 3, 1));
    CHECK_THROWS_AS(random_regular(5, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_regular(4, 4, 0), std::invalid_argument);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = random_regular(12, 3, seed);
        for (Vertex v = 0; v < g.size(); ++v) CHECK(g.degree(v) == 3);
    }
}

TEST_CASE("balls") {
    const auto g = complete(5);
    for (Vertex x = 0; x < 5; ++x) CHECK(ball(g, x, 0) == std::vector<Vertex>{x});
    CHECK(ball(g, 2, 1).size() == 5);
    CHECK(ball(cycle(8), 0, 2).size() == 5);
    CHECK(ball(cycle(8), 0, 2) == Metric(cycle(8)).ball(0, 2));
}

TEST_CASE("corpus invariants: symmetry, simplicity, degree sums") {
    for (const auto& g : corpus()) {
        std::size_t total = 0;
        std::size_t kmax = 0;
        for (Vertex v = 0; v < g.size(); ++v) {
            total += g.degree(v);
            kmax = std::max(kmax, g.degree(v));
        }
        CHECK(total == g.num_directed_edges());
        CHECK(kmax == g.max_degree());
        const auto edges = g.directed_edges();
        CHECK(std::adjacent_find(edges.begin(), edges.end()) == edges.end());
        for (const auto& [u, v] : edges) {
            CHECK(u != v);
            CHECK(g.has_edge(v, u));
        }
    }
}

TEST_CASE("metric agrees with Floyd-Warshall and obeys the growth bound") {
    for (const auto& g : corpus()) {
        const Metric m(g);
        const auto ref = oracle::floyd(g);
        for (Vertex x = 0; x < g.size(); ++x)
            for (Vertex y = 0; y < g.size(); ++y) {
                if (ref[x][y] >= UINT32_MAX / 4) CHECK(m(x, y) == kUnreachable);
                else CHECK(m(x, y) == ref[x][y]);
                CHECK(m(x, y) == m(y, x));
            }
        const auto k = static_cast<double>(g.max_degree());
        if (k < 3) continue;
        for (std::size_t r = 0; r <= 3; ++r) {
            const double bound = 1.0 + k * (std::pow(k - 1.0, static_cast<double>(r)) - 1.0) / (k - 2.0);
            CHECK(static_cast<double>(m.max_ball_size(r)) <= bound);
        }
    }
}

TEST_CASE("components and disjoint union") {
    const auto g = disjoint_union(cycle(3), path(2));
    CHECK(g.size() == 5);
    CHECK_FALSE(g.is_connected());
    CHECK(g.components() == std::vector<std::size_t>{0, 0, 0, 3, 3});
    const Metric m(g);
    CHECK(m(0, 4) == kUnreachable);
    CHECK_FALSE(m.within(0, 4, 100));
    CHECK(m.diameter() == 1);
}
