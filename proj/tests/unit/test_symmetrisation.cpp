#include "doctest.h"

#include <cmath>
#include <random>

#include "xpa/symmetrisation.hpp"

using namespace xpa;

namespace {

SparseRow random_row(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::bernoulli_distribution keep(0.6);
    SparseRow r;
    for (Vertex z = 0; z < n; ++z)
        if (keep(rng)) r.push_back({z, u(rng)});
    return canonical_row(r);
}

}  // namespace

TEST_CASE("alpha and beta") {
    CHECK(alpha(SparseRow{{2, 1.0}}) == SparseRow{{2, 1.0}});
    CHECK(alpha(SparseRow{{2, 4.0}}) == SparseRow{{2, 2.0}});
    CHECK(beta(SparseRow{{2, 1.0}}) == SparseRow{{2, 1.0}});
    const double h = 1.0 / std::sqrt(2.0);
    const auto b = beta(SparseRow{{0, h}, {1, h}});
    CHECK(row_sum(b) == doctest::Approx(1.0).epsilon(1e-15));

    std::mt19937_64 rng(6);
    for (int i = 0; i < 1000; ++i) {
        const auto f = random_row(8, rng), g = random_row(8, rng);
        const auto af = alpha(f), ag = alpha(g);
        CHECK(std::abs(row_l2(af) * row_l2(af) - row_l1(f)) <= 1e-12);
        CHECK(row_l2_distance(af, ag) * row_l2_distance(af, ag) <= row_l1_distance(f, g) + 1e-12);
        const auto bf = beta(f);
        CHECK(std::abs(row_l1(bf) - row_l2(f) * row_l2(f)) <= 1e-12);
        CHECK(row_l1_distance(bf, beta(g)) <= row_l2_distance(f, g) * (row_l2(f) + row_l2(g)) + 1e-12);
        const auto back = beta(af);
        REQUIRE(back.size() == f.size());
        for (std::size_t j = 0; j < f.size(); ++j) CHECK(back[j].value == doctest::Approx(std::abs(f[j].value)));
    }
}

TEST_CASE("normalize") {
    const Metric m(cycle(6));
    const auto unit = alpha(kernel_ball_average(m, 1), m);
    const auto same = normalize(unit, m);
    for (Vertex x = 0; x < 6; ++x) CHECK(row_l2(same.row(x)) == doctest::Approx(1.0).epsilon(1e-15));

    std::vector<SparseRow> doubled(6);
    for (Vertex x = 0; x < 6; ++x) doubled[x] = {{x, 2.0}};
    const auto n2 = normalize(L2Kernel(doubled, m), m);
    CHECK(n2.row(4) == SparseRow{{4, 1.0}});

    const auto lw = alpha(kernel_lazy_walk(cycle(6), m, 2, 0.5), m);
    const auto nl = normalize(lw, m);
    for (double v : nl.row_norms()) CHECK(std::abs(v - 1.0) <= 1e-12);
    CHECK(variation(nl, m, 1, RowNorm::L2).value <= 2.0 * variation(lw, m, 1, RowNorm::L2).value + 1e-12);

    std::vector<SparseRow> small(6);
    for (Vertex x = 0; x < 6; ++x) small[x] = {{x, 0.5}};
    CHECK_THROWS_AS(normalize(L2Kernel(small, m), m), std::domain_error);
}

TEST_CASE("kernel operator") {
    const Metric m(cycle(5));
    const auto id = kernel_operator(alpha(delta_kernel(m), m), m);
    CHECK(id.matrix() == DenseMatrix::identity(5));
    CHECK(id.propagation() == 0);

    std::vector<SparseRow> shift(5);
    for (Vertex x = 0; x < 5; ++x) shift[x] = {{(x + 1) % 5, 1.0}};
    const L2Kernel sk(shift, m);
    const auto perm = kernel_operator(sk, m);
    CHECK(perm.propagation() == 1);
    for (Vertex x = 0; x < 5; ++x) CHECK(perm.matrix()((x + 1) % 5, x) == 1.0);

    const auto root = positive_sqrt(perm, m);
    CHECK(root.matrix().max_abs_diff(DenseMatrix::identity(5)) <= 1e-12);

    const auto theta = normalize(alpha(kernel_ball_average(m, 1), m), m);
    const auto t = kernel_operator(theta, m);
    for (Vertex x = 0; x < 5; ++x) {
        const auto col = t.matrix().column(x);
        double s = 0.0;
        for (double v : col) s += v * v;
        CHECK(std::sqrt(s) == doctest::Approx(row_l2(theta.row(x))));
    }
}

TEST_CASE("positive square root") {
    const Metric m(path(2));
    DenseMatrix d(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 1.0;
    const PropagationOperator t(d, m);
    const auto root = positive_sqrt(t, m);
    CHECK(root.matrix().max_abs_diff(d) <= 1e-12);
    CHECK(root.is_positive_semidefinite());
    CHECK(positive_sqrt(PropagationOperator(DenseMatrix::identity(2), m), m).matrix() == DenseMatrix::identity(2));

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1, 1);
    const Metric mm(complete(7));
    DenseMatrix a(7, 7);
    for (std::size_t r = 0; r < 7; ++r)
        for (std::size_t c = 0; c < 7; ++c) a(r, c) = u(rng);
    const PropagationOperator ta(a, mm);
    const auto ra = positive_sqrt(ta, mm);
    CHECK(ra.is_self_adjoint(0.0));
    CHECK(ra.is_positive_semidefinite());
    CHECK((ra.matrix() * ra.matrix()).max_abs_diff(a.transpose() * a) <= 1e-9);
}

TEST_CASE("truncation") {
    const Metric m(cycle(8));
    const auto id = PropagationOperator(DenseMatrix::identity(8), m);
    for (std::size_t s = 0; s < 3; ++s) {
        const auto tr = truncate(id, m, s);
        CHECK(tr.error == 0.0);
        CHECK(tr.op.matrix() == DenseMatrix::identity(8));
    }
    const auto theta = normalize(alpha(kernel_ball_average(m, 1), m), m);
    const auto root = positive_sqrt(kernel_operator(theta, m), m);
    CHECK(truncate(root, m, 4).error <= 1e-12);
    double prev = INFINITY;
    for (std::size_t s = 0; s <= 4; ++s) {
        const auto tr = truncate(root, m, s);
        CHECK(tr.op.propagation() <= s);
        CHECK(tr.op.is_self_adjoint(0.0));
        CHECK(tr.error <= prev + 1e-9);
        prev = tr.error;
    }
}

TEST_CASE("symmetrise") {
    const Metric c8(cycle(8));
    const auto d = symmetrise(delta_kernel(c8), c8, 0);
    CHECK(d.report.symmetry_defect == 0.0);
    CHECK(d.report.unital_defect <= 1e-12);
    CHECK(d.report.truncation_error <= 1e-12);
    for (Vertex x = 0; x < 8; ++x) {
        REQUIRE(d.psi.row(x).size() == 1);
        CHECK(d.psi.row(x)[0].index == x);
        CHECK(d.psi.row(x)[0].value == doctest::Approx(1.0));
    }

    const auto s = symmetrise(kernel_ball_average(c8, 1), c8, 2);
    CHECK(s.report.bound_check);
    CHECK(s.report.symmetry_defect <= 1e-10);
    CHECK(s.psi.support_radius() <= 2);
    CHECK(s.report.propagation == s.psi.support_radius());
    const double err = s.report.truncation_error;
    CHECK(s.report.variation_after <= s.report.variation_before + 2 * err + 1e-9);
    CHECK(s.report.unital_defect <= err + s.report.rowsum_slack + 1e-9);

    const Metric m3(margulis(3));
    const auto lw = symmetrise(kernel_lazy_walk(margulis(3), m3, 1, 0.5), m3, 1);
    CHECK(lw.report.bound_check);

    CHECK_THROWS_AS(symmetrise(scaled(kernel_ball_average(c8, 1), 0.5, c8), c8, 2), std::invalid_argument);
}

TEST_CASE("back to l1") {
    const Metric c8(cycle(8));
    const auto psi = alpha(delta_kernel(c8), c8);
    const auto phi = to_l1_symmetric(psi, c8);
    CHECK(phi.is_symmetric());
    CHECK(phi.rowsum_dev() == 0.0);
    CHECK(phi.row(5) == SparseRow{{5, 1.0}});

    std::vector<SparseRow> lopsided(8);
    lopsided[0] = {{1, 0.5}};
    CHECK_THROWS_AS(to_l1_symmetric(L2Kernel(lopsided, c8), c8), std::invalid_argument);

    for (const auto& g : {cycle(12), hypercube(3), margulis(3)}) {
        const Metric m(g);
        for (std::size_t S : {1u, 2u}) {
            const auto s = symmetrise(kernel_ball_average(m, S), m, S);
            const auto k = to_l1_symmetric(s.psi, m);
            CHECK(k.is_symmetric());
            CHECK(k.is_nonnegative());
            const double e = s.report.truncation_error;
            CHECK(k.rowsum_dev() <= e * (2 + e) + 1e-9);
            double top = 0.0;
            for (double v : s.psi.row_norms()) top = std::max(top, v);
            CHECK(variation(k, m, 1).value <= variation(s.psi, m, 1, RowNorm::L2).value * 2 * top + 1e-12);
        }
    }
}
