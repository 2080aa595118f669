#include "xpa/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "xpa/property_a.hpp"
#include "xpa/symmetrisation.hpp"

namespace xpa {

namespace {

void require_symmetric(const Kernel& phi, const Graph& g, const char* who) {
    if (phi.size() != g.size())
        throw std::invalid_argument(std::string(who) + ": kernel size differs from graph size");
    if (!phi.is_symmetric())
        throw std::invalid_argument(std::string(who) + ": kernel is not symmetric");
}

}  // namespace

std::vector<double> edge_sums(const Kernel& phi, const Graph& g) {
    std::vector<double> sums(g.size(), 0.0);
    for (const auto& [x0, x1] : g.directed_edges()) {
        const auto& a = phi.row(x1);
        const auto& b = phi.row(x0);
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
                sums[a[i].index] += std::abs(a[i].value);
                ++i;
            } else if (i == a.size() || b[j].index < a[i].index) {
                sums[b[j].index] += std::abs(b[j].value);
                ++j;
            } else {
                sums[a[i].index] += std::abs(a[i].value - b[j].value);
                ++i;
                ++j;
            }
        }
    }
    return sums;
}

Vertex basepoint(const Kernel& phi, const Graph& g) {
    require_symmetric(phi, g, "basepoint");
    if (g.size() == 0) throw std::invalid_argument("basepoint: empty graph");
    const auto sums = edge_sums(phi, g);
    const double best = *std::min_element(sums.begin(), sums.end());
    const double tie = best + 1e-12 * std::max(1.0, std::abs(best));
    for (Vertex z = 0; z < sums.size(); ++z)
        if (sums[z] <= tie) return z;
    return 0;
}

CheegerEstimate cheeger_lower(const Graph& g, std::size_t cap) {
    if (g.size() < 2 || !g.is_connected()) return {0.0, HSource::Exact};
    if (g.size() <= cap) return {cheeger_exact(g, cap).h().value(), HSource::Exact};
    return {std::max(0.0, cheeger_spectral_lower_bound(g)), HSource::Spectral};
}

std::vector<Inequality> WitnessReport::all() const {
    std::vector<Inequality> out(sum_identity);
    out.push_back(norm_upper);
    out.push_back(norm_lower);
    out.insert(out.end(), coboundary_chain.begin(), coboundary_chain.end());
    out.push_back(gap_check);
    return out;
}

bool WitnessReport::holds(double tol) const {
    const auto list = all();
    return std::all_of(list.begin(), list.end(), [tol](const Inequality& q) { return q.holds(tol); });
}

WitnessReport extract_witness(const Kernel& phi, const Graph& g, std::size_t cap) {
    require_symmetric(phi, g, "extract_witness");
    const Metric metric(g);
    const std::size_t n = g.size();
    if (n == 0) throw std::invalid_argument("extract_witness: empty graph");

    WitnessReport w;
    const auto sums = edge_sums(phi, g);
    w.basepoint = basepoint(phi, g);
    const Vertex e = w.basepoint;
    w.n = n;
    w.support_radius = phi.support_radius();
    w.ball_size = metric.ball(e, w.support_radius).size();
    w.k = g.max_degree();
    w.directed_edges = g.num_directed_edges();

    std::vector<double> values(n);
    for (Vertex x = 0; x < n; ++x) values[x] = phi.value(x, e) - 1.0 / static_cast<double>(n);
    w.f = VertexFunction(std::move(values));
    w.sum_f = w.f.sum();
    w.rowsum_e = row_sum(phi.row(e));
    w.row_l1_e = row_l1(phi.row(e));
    w.l1_norm = w.f.l1_norm();
    w.quotient_norm = quotient_norm(w.f).value;
    w.coboundary_l1 = coboundary(g, w.f).l1_norm();
    if (w.quotient_norm > 0.0) w.ratio = w.coboundary_l1 / w.quotient_norm;

    w.edge_sum_e = sums[e];
    double total_sum = 0.0;
    for (double s : sums) total_sum += s;
    w.mean_edge_sum = total_sum / static_cast<double>(n);
    for (const auto& [x0, x1] : g.directed_edges())
        w.max_edge_variation = std::max(w.max_edge_variation, row_l1_distance(phi.row(x1), phi.row(x0)));
    w.variation_r1 = variation(phi, metric, 1).value;
    w.h = cheeger_lower(g, cap);

    const double dn = static_cast<double>(n);
    w.sum_identity = {{"sum_f <= rowsum_e - 1", w.sum_f, w.rowsum_e - 1.0},
                      {"rowsum_e - 1 <= sum_f", w.rowsum_e - 1.0, w.sum_f}};
    w.norm_upper = {"||f||_1 <= ||phi(e)||_1 + 1", w.l1_norm, w.row_l1_e + 1.0};
    w.norm_lower = {"1 - N_S/n <= ||f||_1", 1.0 - static_cast<double>(w.ball_size) / dn, w.l1_norm};
    const double averaged = static_cast<double>(w.directed_edges) / dn * w.max_edge_variation;
    w.coboundary_chain = {
        {"||df||_1 <= edge_sum(e)", w.coboundary_l1, w.edge_sum_e},
        {"edge_sum(e) <= mean edge_sum", w.edge_sum_e, w.mean_edge_sum},
        {"mean edge_sum <= (|E|/n) max edge variation", w.mean_edge_sum, averaged},
        {"(|E|/n) max edge variation <= k V(R=1)", averaged, static_cast<double>(w.k) * w.variation_r1},
    };
    w.gap_check = {"2h quotient_norm <= ||df||_1", 2.0 * w.h.h * w.quotient_norm, w.coboundary_l1};

    if (w.k > 0) {
        const double core = 1.0 - static_cast<double>(w.ball_size) / dn - std::abs(w.sum_f);
        w.sharper_bound = std::max(0.0, w.h.h / static_cast<double>(w.k) * core);
    }
    return w;
}

LowerBound variation_lower_bound(const Graph& g, std::size_t S, double rowsum_dev, std::size_t cap) {
    if (rowsum_dev < 0.0) throw std::invalid_argument("variation_lower_bound: negative row-sum deviation");
    LowerBound lb;
    lb.n = g.size();
    lb.k = g.max_degree();
    lb.rowsum_dev = rowsum_dev;
    lb.ball_size = lb.n == 0 ? 0 : Metric(g).max_ball_size(S);
    const double core = lb.n == 0 ? 0.0
                                  : 1.0 - static_cast<double>(lb.ball_size) / static_cast<double>(lb.n) - rowsum_dev;
    if (core <= 0.0 || lb.k == 0) {
        lb.vacuous = true;
        return lb;
    }
    lb.h = cheeger_lower(g, cap);
    lb.value = std::max(0.0, lb.h.h / static_cast<double>(lb.k) * core);
    return lb;
}

std::string to_string(Recipe r) {
    switch (r) {
        case Recipe::BallAverage: return "ball_average";
        case Recipe::LazyWalk: return "lazy_walk";
        case Recipe::Symmetrised: return "symmetrised";
        case Recipe::PropaSymmetric: return "propa_symmetric";
    }
    return "unknown";
}

Recipe parse_recipe(const std::string& name) {
    for (Recipe r : {Recipe::BallAverage, Recipe::LazyWalk, Recipe::Symmetrised, Recipe::PropaSymmetric})
        if (to_string(r) == name) return r;
    throw std::invalid_argument("unknown kernel recipe '" + name + "'");
}

Kernel recipe_kernel(Recipe recipe, const Graph& g, const Metric& metric, std::size_t S) {
    switch (recipe) {
        case Recipe::BallAverage: return kernel_ball_average(metric, S);
        case Recipe::LazyWalk: return kernel_lazy_walk(g, metric, S, 0.5);
        case Recipe::Symmetrised: {
            auto s = symmetrise(kernel_ball_average(metric, S), metric, S);
            return to_l1_symmetric(s.psi, metric);
        }
        case Recipe::PropaSymmetric: {
            PropaOptions opts;
            opts.symmetric = true;
            return propa_optimum(metric, 1, S, opts).kernel;
        }
    }
    throw std::invalid_argument("recipe_kernel: unknown recipe");
}

std::string IncompatibilityRow::verdict(double floor) const {
    if (bound.vacuous) return "vacuous";
    if (bound.value >= floor) return "obstructed";
    return bound.value > 0.0 ? "weak" : "open";
}

IncompatibilityReport family_incompatibility(const GraphFamily& family, const IncompatibilityOptions& options) {
    if (family.horizon() == 0) throw std::invalid_argument("family_incompatibility: empty family");
    if (!(options.floor > 0.0)) throw std::invalid_argument("family_incompatibility: floor must be positive");
    const UnionSpace space(family);
    IncompatibilityReport rep;
    rep.generator = family.generator;
    rep.recipe = options.recipe;
    rep.radius = options.radius;
    rep.rowsum_dev = options.rowsum_dev;
    rep.floor = options.floor;

    for (std::size_t c = 0; c < family.horizon(); ++c) {
        const Graph& g = family.graphs[c];
        const std::size_t S = options.radius.at(g.size());
        if (!space.localizes(c, S))
            throw std::invalid_argument("family_incompatibility: S = " + std::to_string(S) +
                                        " reaches the separation of component " + std::to_string(c + 1));
        const Metric& metric = space.component_metric(c);
        IncompatibilityRow row;
        row.index = c + 1;
        row.n = g.size();
        row.S = S;
        row.bound = variation_lower_bound(g, S, options.rowsum_dev, options.cap);
        const Kernel phi = recipe_kernel(options.recipe, g, metric, S);
        row.achieved = variation(phi, metric, 1).value;
        row.kernel_symmetric = phi.is_symmetric();
        row.kernel_rowsum_dev = phi.rowsum_dev();
        row.kernel_bound = variation_lower_bound(g, S, row.kernel_rowsum_dev, options.cap).value;
        rep.rows.push_back(std::move(row));
    }

    rep.inf_bound = std::numeric_limits<double>::infinity();
    rep.vacuous = true;
    std::vector<double> ns, vs, lbs;
    for (const auto& r : rep.rows) {
        rep.inf_bound = std::min(rep.inf_bound, r.bound.value);
        rep.vacuous = rep.vacuous && r.bound.vacuous;
        ns.push_back(static_cast<double>(r.n));
        vs.push_back(r.achieved);
        lbs.push_back(r.bound.value);
    }
    rep.positive = rep.inf_bound > 0.0;
    rep.obstructed = !rep.vacuous && rep.inf_bound >= options.floor;
    rep.achieved_slope = log_log_slope(ns, vs);
    rep.bound_slope = log_log_slope(ns, lbs);
    return rep;
}

}  // namespace xpa
