#include "xpa/family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xpa/io.hpp"

namespace xpa {

std::size_t GraphFamily::k_bound() const {
    std::size_t k = 0;
    for (const auto& g : graphs) k = std::max(k, g.max_degree());
    return k;
}

std::vector<std::size_t> GraphFamily::sizes() const {
    std::vector<std::size_t> out;
    for (const auto& g : graphs) out.push_back(g.size());
    return out;
}

GraphFamily make_family(const std::string& generator, std::size_t first, std::size_t last,
                        const GeneratorParams& params, std::uint64_t seed) {
    if (last < first) throw std::invalid_argument("make_family: empty index range");
    GraphFamily fam;
    fam.generator = generator;

    std::function<Graph(std::size_t)> make;
    if (generator == "cycle") make = cycle;
    else if (generator == "path") make = path;
    else if (generator == "complete") make = complete;
    else if (generator == "hypercube") make = hypercube;
    else if (generator == "margulis") make = margulis;
    else if (generator == "random_regular")
        make = [&](std::size_t n) { return random_regular(n, params.degree, seed + n); };
    else if (generator == "from_files") {
        if (last >= params.files.size())
            throw std::invalid_argument("make_family: range exceeds the listed files");
        make = [&](std::size_t i) { return load_graph_file(params.files[i]); };
    } else {
        throw std::invalid_argument("make_family: unknown generator '" + generator + "'");
    }

    for (std::size_t p = first; p <= last; ++p) {
        fam.parameters.push_back(p);
        fam.graphs.push_back(make(p));
    }
    return fam;
}

std::uint64_t default_spacing(std::size_t i, std::uint32_t diam_i, std::uint32_t diam_next) {
    return std::max(diam_i, diam_next) + static_cast<std::uint64_t>(i) + 1;
}

UnionSpace::UnionSpace(const GraphFamily& family, const SpacingRule& rule) {
    if (family.graphs.empty()) throw std::invalid_argument("UnionSpace: empty family");
    for (const auto& g : family.graphs) {
        metrics_.emplace_back(g);
        diameters_.push_back(metrics_.back().diameter());
        offsets_.push_back(offsets_.back() + g.size());
    }
    for (std::size_t c = 0; c + 1 < metrics_.size(); ++c) {
        std::uint64_t s = rule(c + 1, diameters_[c], diameters_[c + 1]);
        if (!separations_.empty()) s = std::max(s, separations_.back() + 1);
        s = std::max<std::uint64_t>(s, 1);
        separations_.push_back(s);
    }
}

std::size_t UnionSpace::component_of(std::size_t point) const {
    if (point >= size()) throw std::out_of_range("UnionSpace: point out of range");
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), point);
    return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

std::uint64_t UnionSpace::isolation(std::size_t c) const {
    std::uint64_t best = kUnreachable;
    if (c > 0) best = std::min(best, separations_[c - 1]);
    if (c + 1 < metrics_.size()) best = std::min(best, separations_[c]);
    return best;
}

std::uint64_t UnionSpace::distance(std::size_t p, std::size_t q) const {
    std::size_t a = component_of(p), b = component_of(q);
    if (a == b) {
        auto d = metrics_[a](p - offsets_[a], q - offsets_[a]);
        return d == kUnreachable ? std::uint64_t{kUnreachable} : d;
    }
    if (a > b) std::swap(a, b);
    std::uint64_t d = 0;
    for (std::size_t c = a; c < b; ++c) d += separations_[c];
    return d;
}

Metric UnionSpace::metric() const {
    const std::size_t n = size();
    std::vector<std::uint32_t> dist(n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const auto d = distance(p, q);
            if (d >= kUnreachable && component_of(p) != component_of(q))
                throw std::overflow_error("UnionSpace::metric: distance overflow");
            dist[p * n + q] = static_cast<std::uint32_t>(std::min<std::uint64_t>(d, kUnreachable));
        }
    return Metric(n, std::move(dist));
}

std::optional<double> log_log_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) return std::nullopt;
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double m = static_cast<double>(x.size());
    const double denom = m * sxx - sx * sx;
    if (std::abs(denom) < 1e-300) return std::nullopt;
    return (m * sxy - sx * sy) / denom;
}

FamilyDiagnostic expander_verdict(const GraphFamily& family, std::size_t horizon, double threshold,
                                  std::size_t cap) {
    if (horizon == 0 || horizon > family.horizon()) horizon = family.horizon();
    if (horizon == 0) throw std::invalid_argument("expander_verdict: empty family");

    FamilyDiagnostic d;
    d.threshold = threshold;
    for (std::size_t i = 0; i < horizon; ++i) {
        const Graph& g = family.graphs[i];
        d.sizes.push_back(g.size());
        if (g.size() <= cap) {
            auto cut = cheeger_exact(g, cap);
            d.exact.push_back(cut.ratio());
            d.margins.push_back(cut.ratio().value());
            d.heuristic.push_back(false);
        } else {
            auto cut = cheeger_sweep(g);
            d.exact.push_back(std::nullopt);
            d.margins.push_back(cut.ratio().value());
            d.heuristic.push_back(true);
            d.any_heuristic = true;
        }
    }
    d.inf_margin = *std::min_element(d.margins.begin(), d.margins.end());
    d.sizes_increasing = std::adjacent_find(d.sizes.begin(), d.sizes.end(),
                                            std::greater_equal<>()) == d.sizes.end();
    std::vector<double> n(d.sizes.begin(), d.sizes.end());
    d.decay_exponent = log_log_slope(n, d.margins);
    d.expander_consistent = bounded_below_margin(d.margins, threshold) && d.sizes_increasing;
    return d;
}

bool bounded_below_margin(std::span<const double> margins, double tol) {
    if (margins.empty()) throw std::invalid_argument("bounded_below_margin: no margins");
    return *std::min_element(margins.begin(), margins.end()) >= tol;
}

}  // namespace xpa
