#include "xpa/property_a.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "xpa/errors.hpp"

namespace xpa {

namespace {

constexpr std::size_t kNoVar = static_cast<std::size_t>(-1);

// Variable layout: one variable per admissible kernel entry phi(x)(z), shared
// between (x,z) and (z,x) in the symmetric case, then the level t.
struct Layout {
    std::size_t n = 0;
    std::vector<std::vector<Vertex>> balls;
    std::vector<std::size_t> index;  // n*n, kNoVar outside the support
    std::size_t num_entries = 0;

    std::size_t var(Vertex x, Vertex z) const { return index[x * n + z]; }
    std::size_t level() const { return num_entries; }
};

Layout make_layout(const Metric& metric, std::size_t S, bool symmetric) {
    Layout L;
    L.n = metric.size();
    L.index.assign(L.n * L.n, kNoVar);
    for (Vertex x = 0; x < L.n; ++x) {
        L.balls.push_back(metric.ball(x, S));
        for (Vertex z : L.balls.back()) {
            if (symmetric && z < x) {
                L.index[x * L.n + z] = L.index[z * L.n + x];
            } else {
                L.index[x * L.n + z] = L.num_entries++;
            }
        }
    }
    return L;
}

std::vector<SparseRow> rows_from(const Layout& L, const std::vector<double>& x) {
    std::vector<SparseRow> rows(L.n);
    for (Vertex p = 0; p < L.n; ++p)
        for (Vertex z : L.balls[p]) {
            const double v = std::max(0.0, x[L.var(p, z)]);
            if (v != 0.0) rows[p].push_back({z, v});
        }
    return rows;
}

// Union of two ascending vertex lists.
std::vector<Vertex> support_union(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

PropaResult propa_optimum(const Metric& metric, std::size_t R, std::size_t S, const PropaOptions& opt) {
    const std::size_t n = metric.size();
    if (n == 0) throw std::invalid_argument("propa_optimum: empty space");
    if (R < 1) throw std::invalid_argument("propa_optimum: need R >= 1");
    const std::size_t work = n * metric.max_ball_size(S);
    if (work > opt.variable_cap)
        throw CapExceeded("propa_optimum: n * max ball size = " + std::to_string(work) + " exceeds cap " +
                          std::to_string(opt.variable_cap));

    const Layout L = make_layout(metric, S, opt.symmetric);
    LinearProgram lp;
    lp.num_vars = L.num_entries + 1;
    lp.cost.assign(lp.num_vars, 0.0);
    lp.cost[L.level()] = 1.0;
    for (Vertex x = 0; x < n; ++x) {
        LinearConstraint row{{}, Sense::Equal, 1.0};
        for (Vertex z : L.balls[x]) row.terms.emplace_back(L.var(x, z), 1.0);
        lp.constraints.push_back(std::move(row));
    }
    std::vector<double> upper_bounds(lp.num_vars, 1.0);
    upper_bounds[L.level()] = 2.0;

    struct Pair {
        Vertex x, y;
        std::vector<Vertex> support;
    };
    std::vector<Pair> pairs;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
            if (metric.within(x, y, R)) pairs.push_back({x, y, support_union(L.balls[x], L.balls[y])});

    std::set<std::pair<Vertex, Vertex>> active;
    IncrementalSimplex simplex(std::move(lp), opt.simplex);
    PropaResult out;
    std::vector<double> x;
    for (;;) {
        if (out.rounds == opt.max_rounds) throw std::runtime_error("propa_optimum: round budget exhausted");
        ++out.rounds;
        auto sol = simplex.solve();
        out.pivots += sol.pivots;
        if (sol.status != LpStatus::Optimal)
            throw std::runtime_error("propa_optimum: LP solver did not reach optimality");
        x = std::move(sol.x);
        const double level = x[L.level()];
        out.lower = std::max(0.0, dual_bound(simplex.program(), sol.duals, upper_bounds));

        auto value_at = [&](Vertex p, Vertex z) {
            const auto v = L.var(p, z);
            return v == kNoVar ? 0.0 : std::max(0.0, x[v]);
        };
        double upper = 0.0;
        std::size_t added = 0;
        for (const auto& pr : pairs) {
            double v = 0.0;
            for (Vertex z : pr.support) v += std::abs(value_at(pr.x, z) - value_at(pr.y, z));
            upper = std::max(upper, v);
            if (v <= level + opt.tol) continue;

            // Rows of x and y both sum to 1, so ||phi(x) - phi(y)||_1 is
            // twice the positive part: phi(x)(z) - phi(y)(z) <= w_z over
            // z in B_S(x), and 2 sum_z w_z <= t. Coefficients are merged
            // per variable since symmetric layouts share entries.
            if (!active.insert({pr.x, pr.y}).second) continue;
            LinearConstraint total{{}, Sense::LessEqual, 0.0};
            for (Vertex z : L.balls[pr.x]) {
                std::vector<std::pair<std::size_t, double>> d{{L.var(pr.x, z), 1.0}};
                if (auto vy = L.var(pr.y, z); vy != kNoVar) {
                    if (d.back().first == vy) d.back().second -= 1.0;
                    else d.emplace_back(vy, -1.0);
                }
                std::erase_if(d, [](const auto& t) { return t.second == 0.0; });
                if (d.empty()) continue;
                const std::size_t w = simplex.add_variable(0.0);
                upper_bounds.push_back(1.0);
                d.emplace_back(w, -1.0);
                simplex.add_constraint({std::move(d), Sense::LessEqual, 0.0});
                total.terms.emplace_back(w, 2.0);
            }
            total.terms.emplace_back(L.level(), -1.0);
            simplex.add_constraint(std::move(total));
            ++added;
        }
        out.cuts += added;
        out.upper = upper;
        if (added == 0) break;
    }

    out.kernel = Kernel(rows_from(L, x), metric);
    out.profile = variation(out.kernel, metric, R);
    out.upper = out.profile.value;
    out.value = out.upper;
    out.lower = std::min(out.lower, out.upper);
    return out;
}

}  // namespace xpa
