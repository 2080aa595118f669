#include "doctest.h"

#include <cmath>

#include "xpa/family.hpp"

using namespace xpa;

TEST_CASE("make_family") {
    const auto cycles = make_family("cycle", 4, 12);
    CHECK(cycles.horizon() == 9);
    CHECK(cycles.k_bound() == 2);
    CHECK(cycles.sizes().front() == 4);
    CHECK(cycles.sizes().back() == 12);

    const auto m = make_family("margulis", 2, 6);
    CHECK(m.sizes() == std::vector<std::size_t>{4, 9, 16, 25, 36});
    CHECK(m.k_bound() <= 8);

    GeneratorParams p;
    p.degree = 4;
    const auto rr = make_family("random_regular", 6, 8, p, 4);
    CHECK(rr.horizon() == 3);
    CHECK(rr.graphs[0] == make_family("random_regular", 6, 8, p, 4).graphs[0]);

    CHECK_THROWS_AS(make_family("cycle", 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_family("petersen", 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_family("from_files", 1, 2), std::invalid_argument);
}

TEST_CASE("coarse union") {
    const auto single = make_family("cycle", 7, 7);
    const UnionSpace one(single);
    const Metric hop(single.graphs[0]);
    const Metric whole = one.metric();
    for (Vertex x = 0; x < 7; ++x)
        for (Vertex y = 0; y < 7; ++y) CHECK(whole(x, y) == hop(x, y));
    CHECK(one.isolation(0) == kUnreachable);

    GraphFamily two;
    two.generator = "triangles";
    two.parameters = {3, 3};
    two.graphs = {complete(3), complete(3)};
    const UnionSpace tri(two);
    CHECK(tri.separation(0) >= 2);
    CHECK(tri.separation(0) > tri.diameter(0));
    CHECK(tri.distance(0, 3) == tri.separation(0));
    CHECK(tri.distance(1, 5) == tri.separation(0));

    const auto fam = make_family("cycle", 3, 10);
    const UnionSpace u(fam);
    for (std::size_t c = 0; c + 1 < u.num_components(); ++c) {
        CHECK(u.separation(c) > u.diameter(c));
        CHECK(u.separation(c) > u.diameter(c + 1));
        CHECK(u.separation(c) >= c + 2);
        if (c > 0) CHECK(u.separation(c) > u.separation(c - 1));
    }
    const Metric m = u.metric();
    for (std::size_t c = 0; c < u.num_components(); ++c) {
        const Metric& local = u.component_metric(c);
        for (std::size_t x = 0; x < local.size(); ++x) {
            for (std::size_t y = 0; y < local.size(); ++y)
                CHECK(m(u.offset(c) + x, u.offset(c) + y) == local(x, y));
            const std::size_t S = u.isolation(c) - 1;
            for (Vertex p : m.ball(u.offset(c) + x, S)) CHECK(u.component_of(p) == c);
        }
        CHECK(u.localizes(c, u.isolation(c) - 1));
        CHECK_FALSE(u.localizes(c, u.isolation(c)));
    }
}

TEST_CASE("expander verdicts") {
    const auto cycles = expander_verdict(make_family("cycle", 4, 24));
    REQUIRE(cycles.horizon() == 21);
    for (std::size_t i = 0; i < cycles.horizon(); ++i) {
        const std::size_t n = cycles.sizes[i];
        CHECK(cycles.exact[i].has_value());
        CHECK(*cycles.exact[i] == Ratio{4, n / 2});
        CHECK(cycles.margins[i] == 4.0 / static_cast<double>(n / 2));
    }
    CHECK_FALSE(cycles.expander_consistent);
    CHECK(cycles.sizes_increasing);
    REQUIRE(cycles.decay_exponent.has_value());
    CHECK(*cycles.decay_exponent < -0.8);
    CHECK(cycles.inf_margin == cycles.margins.back());

    const auto marg = expander_verdict(make_family("margulis", 2, 6));
    CHECK(marg.inf_margin > 0.0);
    CHECK(marg.expander_consistent);
    CHECK(marg.exact[2].has_value());
    CHECK(marg.any_heuristic);  // 25 and 36 vertices sit above the default cap
    CHECK(bounded_below_margin(marg.margins, marg.inf_margin / 2));

    const auto kn = expander_verdict(make_family("complete", 4, 10));
    CHECK(kn.expander_consistent);
    for (std::size_t i = 0; i + 1 < kn.horizon(); ++i) CHECK(kn.margins[i] <= kn.margins[i + 1]);

    const auto capped = expander_verdict(make_family("cycle", 20, 30), 0, 0.1, 24);
    CHECK(capped.any_heuristic);
    CHECK(capped.heuristic.back());
    CHECK_FALSE(capped.exact.back().has_value());
}

TEST_CASE("verdicts are monotone in the horizon") {
    const auto fam = make_family("cycle", 4, 20);
    bool failed = false;
    for (std::size_t h = 1; h <= fam.horizon(); ++h) {
        const auto d = expander_verdict(fam, h, 0.5);
        CHECK(d.horizon() == h);
        if (failed) CHECK_FALSE(d.expander_consistent);
        failed = failed || !d.expander_consistent;
    }
    CHECK(failed);
}

TEST_CASE("bounded_below_margin and slopes") {
    const std::vector<double> ones(5, 1.0);
    CHECK(bounded_below_margin(ones, 0.5));
    std::vector<double> inv;
    for (int n = 1; n <= 100; ++n) inv.push_back(1.0 / n);
    CHECK_FALSE(bounded_below_margin(inv, 0.02));
    CHECK_THROWS_AS(bounded_below_margin(std::vector<double>{}, 0.1), std::invalid_argument);

    const std::vector<double> x{1, 2, 4, 8};
    const std::vector<double> y{1, 0.5, 0.25, 0.125};
    CHECK(*log_log_slope(x, y) == doctest::Approx(-1.0));
    CHECK_FALSE(log_log_slope(std::vector<double>{1.0}, std::vector<double>{1.0}).has_value());
    CHECK_FALSE(log_log_slope(x, std::vector<double>{1, 0, 1, 1}).has_value());
}
