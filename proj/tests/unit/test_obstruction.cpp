#include "doctest.h"

#include <cmath>

#include "xpa/obstruction.hpp"
#include "xpa/property_a.hpp"
#include "xpa/symmetrisation.hpp"

using namespace xpa;

TEST_CASE("basepoint examples") {
    const Metric k5(complete(5));
    CHECK(basepoint(kernel_ball_average(k5, 1), complete(5)) == 0);
    const Metric p2(path(2));
    CHECK(basepoint(delta_kernel(p2), path(2)) == 0);
    CHECK(edge_sums(delta_kernel(p2), path(2)) == std::vector<double>{2.0, 2.0});

    const Metric c8(cycle(8));
    const auto phi = recipe_kernel(Recipe::Symmetrised, cycle(8), c8, 1);
    const auto sums = edge_sums(phi, cycle(8));
    const Vertex e = basepoint(phi, cycle(8));
    for (Vertex z = 0; z < 8; ++z) CHECK(sums[e] <= sums[z] + 1e-12 * std::max(1.0, sums[e]));

    CHECK_THROWS_AS(basepoint(kernel_lazy_walk(path(4), Metric(path(4)), 1, 0.5), path(4)), std::invalid_argument);
}

TEST_CASE("witness examples") {
    const Metric k4m(complete(4));
    const auto uni = extract_witness(kernel_ball_average(k4m, 1), complete(4));
    CHECK(uni.l1_norm == 0.0);
    CHECK(uni.coboundary_l1 == 0.0);
    CHECK(uni.sum_f == 0.0);
    CHECK_FALSE(uni.ratio.has_value());

    const auto w = extract_witness(delta_kernel(k4m), complete(4));
    CHECK(w.basepoint == 0);
    CHECK(w.f[0] == 0.75);
    CHECK(w.f[1] == -0.25);
    CHECK(w.l1_norm == 1.5);
    CHECK(w.coboundary_l1 == 6.0);
    CHECK(w.sum_f == 0.0);
    CHECK(w.holds());

    const Metric m3(margulis(3));
    const auto s = extract_witness(recipe_kernel(Recipe::Symmetrised, margulis(3), m3, 1), margulis(3));
    CHECK(s.holds());
    CHECK(s.all().size() == 9);
    if (s.ratio) CHECK(*s.ratio >= 2 * s.h.h - 1e-9);
}

TEST_CASE("variation lower bound examples") {
    auto lb = variation_lower_bound(complete(4), 0, 0.0);
    CHECK(lb.value == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(lb.k == 3);
    CHECK(lb.h.h == 2.0);
    CHECK_FALSE(lb.vacuous);
    CHECK(variation(delta_kernel(Metric(complete(4))), Metric(complete(4)), 1).value >= lb.value);

    lb = variation_lower_bound(cycle(8), 4, 0.0);
    CHECK(lb.vacuous);
    CHECK(lb.value == 0.0);

    lb = variation_lower_bound(margulis(4), 1, 0.0);
    CHECK(lb.value > 0.0);
    const auto opt = propa_optimum(Metric(margulis(4)), 1, 1, {.symmetric = true});
    CHECK(opt.value >= lb.value - 1e-9);

    CHECK(variation_lower_bound(disjoint_union(cycle(4), cycle(4)), 1, 0.0).value == 0.0);
    CHECK_THROWS_AS(variation_lower_bound(cycle(8), 1, -0.1), std::invalid_argument);

    const auto big = variation_lower_bound(margulis(6), 1, 0.01, 24);
    CHECK(big.h.source == HSource::Spectral);
    CHECK(big.value > 0.0);
}

TEST_CASE("symmetric LP optima respect the bound and the witness chain") {
    for (const auto& g : {cycle(6), cycle(9), complete(5), hypercube(3), margulis(2), margulis(3), path(6)}) {
        const Metric m(g);
        for (std::size_t S = 0; S <= 2; ++S) {
            const auto r = propa_optimum(m, 1, S, {.symmetric = true});
            if (!r.kernel.is_symmetric()) continue;
            const auto lb = variation_lower_bound(g, r.kernel.support_radius(), r.kernel.rowsum_dev());
            CHECK(r.value >= lb.value - 1e-9);
            const auto w = extract_witness(r.kernel, g);
            for (const auto& q : w.all()) {
                INFO(q.name);
                CHECK(q.holds());
            }
        }
    }
}

TEST_CASE("recipes") {
    CHECK(parse_recipe("lazy_walk") == Recipe::LazyWalk);
    CHECK(to_string(Recipe::PropaSymmetric) == "propa_symmetric");
    CHECK_THROWS_AS(parse_recipe("gaussian"), std::invalid_argument);
    const Metric c8(cycle(8));
    for (Recipe r : {Recipe::BallAverage, Recipe::LazyWalk, Recipe::Symmetrised, Recipe::PropaSymmetric})
        CHECK(recipe_kernel(r, cycle(8), c8, 2).support_radius() <= 2);
    CHECK(RadiusRule{3, 0}.at(100) == 3);
    CHECK(RadiusRule{1, 8}.at(64) == 8);
}

TEST_CASE("family incompatibility") {
    IncompatibilityOptions opts;
    opts.recipe = Recipe::Symmetrised;
    const auto marg = family_incompatibility(make_family("margulis", 2, 6), opts);
    CHECK(marg.rows.size() == 5);
    CHECK(marg.positive);
    CHECK(marg.obstructed);
    for (const auto& row : marg.rows) {
        CHECK(row.kernel_symmetric);
        CHECK(row.achieved >= row.kernel_bound - 1e-9);
    }

    IncompatibilityOptions cyc;
    cyc.radius = {1, 8};
    const auto cycles = family_incompatibility(make_family("cycle", 8, 64), cyc);
    CHECK_FALSE(cycles.obstructed);
    for (const auto& row : cycles.rows) CHECK(row.achieved == 2.0 / (2.0 * row.S + 1.0));
    REQUIRE(cycles.bound_slope.has_value());
    CHECK(*cycles.bound_slope < 0.0);

    IncompatibilityOptions wide;
    wide.radius = {0, 1};
    CHECK_THROWS_AS(family_incompatibility(make_family("cycle", 4, 8), wide), std::invalid_argument);

    IncompatibilityOptions whole;
    whole.radius = {100, 0};
    const GraphFamily one = make_family("cycle", 6, 6);
    const auto vac = family_incompatibility(one, whole);
    CHECK(vac.vacuous);
    CHECK_FALSE(vac.obstructed);
    CHECK(vac.rows[0].verdict(whole.floor) == "vacuous");
}
