#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "xpa/cochains.hpp"

using namespace xpa;

namespace {

// min over a fine grid of candidate shifts plus every -f(x): the objective is
// piecewise linear with breakpoints at -f(x), so this is exact.
double scan_quotient(const VertexFunction& f) {
    double best = INFINITY;
    for (double v : f.values()) {
        double s = 0.0;
        for (double w : f.values()) s += std::abs(w - v);
        best = std::min(best, s);
    }
    return best;
}

VertexFunction random_function(std::size_t n, std::mt19937_64& rng, double lo = -3.0, double hi = 3.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return VertexFunction(std::move(v));
}

}  // namespace

TEST_CASE("quotient norm examples") {
    auto q = quotient_norm(VertexFunction({1, 0, 0, 0}));
    CHECK(q.value == 1.0);
    CHECK(q.shift == 0.0);
    CHECK(quotient_norm(VertexFunction::constant(5, 3.5)).value == 0.0);
    q = quotient_norm(VertexFunction({1, 1, 0, 0}));
    CHECK(q.value == 2.0);
    CHECK(q.shift >= -1.0);
    CHECK(q.shift <= 0.0);
    CHECK(q.shift == -1.0);  // smallest minimizer
    CHECK(VertexFunction({1, 1, 0, 0}).l1_norm() == 2.0);
}

TEST_CASE("non-finite entries are rejected") {
    CHECK_THROWS_AS(VertexFunction({1.0, NAN}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeFunction({INFINITY}), std::invalid_argument);
}

TEST_CASE("coboundary examples") {
    const auto c8 = cycle(8);
    CHECK(coboundary(c8, VertexFunction::constant(8, 2.0)).l1_norm() == 0.0);
    const std::vector<Vertex> arc{0, 1, 2, 3};
    CHECK(coboundary(c8, VertexFunction::indicator(8, arc)).l1_norm() == 4.0);
    CHECK(boundary_size(c8, arc) == 4);
    const auto df = coboundary(path(3), VertexFunction({0, 1, 2}));
    CHECK(df.l1_norm() == 4.0);
    CHECK(df.size() == 4);
    CHECK(df.is_zero_sum());
}

TEST_CASE("mean_center examples") {
    const auto z = mean_center(VertexFunction::constant(4, 7.0));
    CHECK(z.l1_norm() == 0.0);
    const auto m = mean_center(VertexFunction({1, 0, 0, 0}));
    CHECK(m[0] == 0.75);
    CHECK(m[1] == -0.25);
    CHECK(m.l1_norm() == 1.5);
    CHECK(m.sum() == 0.0);
}

TEST_CASE("co-area decomposition examples") {
    auto levels = coarea_decompose(VertexFunction({2, 2, 2}));
    REQUIRE(levels.size() == 1);
    CHECK(levels[0].weight == 2.0);
    CHECK(levels[0].members == std::vector<Vertex>{0, 1, 2});

    levels = coarea_decompose(VertexFunction({1, 2}));
    REQUIRE(levels.size() == 2);
    CHECK(levels[0].members == std::vector<Vertex>{1});
    CHECK(levels[1].members == std::vector<Vertex>{0, 1});
    CHECK(levels[0].weight == 1.0);
    CHECK(levels[1].weight == 1.0);

    const auto g = path(3);
    const VertexFunction f({1, 2, 3});
    levels = coarea_decompose(f);
    double s = 0.0;
    for (const auto& l : levels) s += l.weight * static_cast<double>(boundary_size(g, l.members));
    CHECK(s == coboundary(g, f).l1_norm());
    CHECK(s == 4.0);

    CHECK_THROWS_AS(coarea_decompose(VertexFunction({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(coarea_decompose(VertexFunction({1, -2})), std::invalid_argument);
}

TEST_CASE("quotient norm, coboundary and mean_center properties") {
    std::mt19937_64 rng(11);
    const std::vector<Graph> graphs{cycle(9), complete(6), hypercube(3), margulis(3), path(7)};
    for (const auto& g : graphs) {
        for (int trial = 0; trial < 300; ++trial) {
            const auto f = random_function(g.size(), rng);
            const auto q = quotient_norm(f);
            CHECK(q.value <= f.l1_norm() + 1e-12);
            CHECK(q.value == doctest::Approx(scan_quotient(f)).epsilon(1e-12));
            std::vector<double> shifted(f.values().begin(), f.values().end());
            for (auto& v : shifted) v += q.shift;
            CHECK(VertexFunction(shifted).l1_norm() == doctest::Approx(q.value).epsilon(1e-12));

            std::vector<double> plus(f.values().begin(), f.values().end());
            for (auto& v : plus) v += 1.75;
            const VertexFunction fp(plus);
            CHECK(quotient_norm(fp).value == doctest::Approx(q.value).epsilon(1e-12));
            const auto d1 = coboundary(g, f), d2 = coboundary(g, fp);
            for (std::size_t e = 0; e < d1.size(); ++e) CHECK(d1[e] == doctest::Approx(d2[e]).epsilon(1e-12));
            CHECK(d1.is_zero_sum(1e-12));

            const auto m = mean_center(f);
            CHECK(std::abs(m.sum()) <= 1e-12);
            CHECK(m.l1_norm() <= 2.0 * f.l1_norm() + 1e-12);
            CHECK(q.value <= m.l1_norm() + 1e-12);
            CHECK(m.l1_norm() <= 2.0 * q.value + 1e-12);
            CHECK(quotient_norm(m).value == doctest::Approx(q.value).epsilon(1e-12));
            const auto mm = mean_center(m);
            for (std::size_t i = 0; i < m.size(); ++i) CHECK(mm[i] == doctest::Approx(m[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("co-area identity and reconstruction on random positive functions") {
    std::mt19937_64 rng(5);
    for (const auto& g : {cycle(10), hypercube(4), margulis(4)}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto f = random_function(g.size(), rng, 0.01, 5.0);
            const auto levels = coarea_decompose(f);
            for (std::size_t j = 1; j < levels.size(); ++j) {
                CHECK(levels[j].weight > 0.0);
                CHECK(levels[j - 1].members.size() < levels[j].members.size());
                CHECK(std::includes(levels[j].members.begin(), levels[j].members.end(),
                                    levels[j - 1].members.begin(), levels[j - 1].members.end()));
            }
            const auto back = reconstruct(g.size(), levels);
            for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(back[i] - f[i]) <= 1e-12);
            double s = 0.0;
            for (const auto& l : levels) s += l.weight * static_cast<double>(boundary_size(g, l.members));
            CHECK(std::abs(s - coboundary(g, f).l1_norm()) <= 1e-12);
        }
    }
}

TEST_CASE("family cochains and sigma maps") {
    std::vector<VertexFunction> centred, ones;
    std::vector<EdgeFunction> images;
    std::mt19937_64 rng(3);
    const std::vector<Graph> fam{cycle(4), cycle(6), cycle(8)};
    for (const auto& g : fam) {
        const auto f = random_function(g.size(), rng);
        centred.push_back(mean_center(f));
        ones.push_back(VertexFunction::constant(g.size(), 1.0));
        images.push_back(coboundary(g, f));
    }
    const FamilyVertexFunction c(centred);
    for (double s : sigma0(c)) CHECK(std::abs(s) <= 1e-12);
    CHECK(c.is_cochain(1e-12));
    CHECK(sigma0(FamilyVertexFunction(ones)) == std::vector<double>{4, 6, 8});
    CHECK(FamilyVertexFunction(ones).sup_l1() == 8.0);
    CHECK_FALSE(FamilyVertexFunction(ones).is_cochain(0.5));
    const FamilyEdgeFunction d(images);
    for (double s : sigma1(d)) CHECK(std::abs(s) <= 1e-12);
    CHECK(d.is_cochain(1e-12));
    CHECK(FamilyEdgeFunction(std::vector<EdgeFunction>{EdgeFunction({1e-13, 0.0})}).is_cochain(1e-12));
}
