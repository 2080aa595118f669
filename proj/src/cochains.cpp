#include "xpa/cochains.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace xpa {

namespace {

double l1(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

// Positive and negative parts are summed separately in ascending magnitude,
// so a multiset of values closed under negation sums to exactly zero.
double total(std::span<const double> v) {
    std::vector<double> pos, neg;
    for (double x : v) (x >= 0.0 ? pos : neg).push_back(std::abs(x));
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end());
    return std::accumulate(pos.begin(), pos.end(), 0.0) -
           std::accumulate(neg.begin(), neg.end(), 0.0);
}

}  // namespace

VertexFunction::VertexFunction(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("VertexFunction: non-finite entry");
}

VertexFunction VertexFunction::indicator(std::size_t n, std::span<const Vertex> subset) {
    std::vector<double> v(n, 0.0);
    for (Vertex x : subset) v.at(x) = 1.0;
    return VertexFunction(std::move(v));
}

double VertexFunction::l1_norm() const { return l1(values_); }
double VertexFunction::sum() const { return total(values_); }

EdgeFunction::EdgeFunction(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("EdgeFunction: non-finite entry");
}

double EdgeFunction::l1_norm() const { return l1(values_); }
double EdgeFunction::sum() const { return total(values_); }
bool EdgeFunction::is_zero_sum(double tol) const { return std::abs(sum()) <= tol; }

QuotientNorm quotient_norm(const VertexFunction& f) {
    if (f.size() == 0) return {};
    std::vector<double> sorted(f.values().begin(), f.values().end());
    std::sort(sorted.begin(), sorted.end());
    // Minimizers of sum |f + c| are c in [-upper median, -lower median].
    const double c = -sorted[sorted.size() / 2];
    double value = 0.0;
    for (double v : f.values()) value += std::abs(v + c);
    return {value, c};
}

EdgeFunction coboundary(const Graph& g, const VertexFunction& f) {
    if (f.size() != g.size()) throw std::invalid_argument("coboundary: size mismatch");
    std::vector<double> out;
    out.reserve(g.num_directed_edges());
    for (auto [u, v] : g.directed_edges()) out.push_back(f[v] - f[u]);
    return EdgeFunction(std::move(out));
}

VertexFunction mean_center(const VertexFunction& f) {
    if (f.size() == 0) return f;
    const double mean = f.sum() / static_cast<double>(f.size());
    std::vector<double> out(f.values().begin(), f.values().end());
    for (double& v : out) v -= mean;
    return VertexFunction(std::move(out));
}

std::size_t boundary_size(const Graph& g, std::span<const Vertex> subset) {
    std::vector<char> in(g.size(), 0);
    for (Vertex v : subset) in.at(v) = 1;
    std::size_t count = 0;
    for (auto [u, v] : g.directed_edges()) count += in[u] != in[v];
    return count;
}

std::vector<LevelSet> coarea_decompose(const VertexFunction& f) {
    for (double v : f.values())
        if (!(v > 0.0)) throw std::invalid_argument("coarea_decompose: entries must be positive");

    std::vector<double> levels(f.values().begin(), f.values().end());
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    // Superlevel sets {f >= level}; highest level gives the smallest set.
    std::vector<LevelSet> out;
    out.reserve(levels.size());
    for (std::size_t j = levels.size(); j-- > 0;) {
        LevelSet ls;
        ls.weight = j == 0 ? levels[0] : levels[j] - levels[j - 1];
        for (Vertex x = 0; x < f.size(); ++x)
            if (f[x] >= levels[j]) ls.members.push_back(x);
        out.push_back(std::move(ls));
    }
    return out;
}

VertexFunction reconstruct(std::size_t n, std::span<const LevelSet> levels) {
    std::vector<double> v(n, 0.0);
    for (const auto& ls : levels)
        for (Vertex x : ls.members) v.at(x) += ls.weight;
    return VertexFunction(std::move(v));
}

}  // namespace xpa
