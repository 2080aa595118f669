#include "xpa/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xpa {

SparseRow canonical_row(SparseRow row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    SparseRow out;
    out.reserve(row.size());
    for (const auto& e : row) {
        if (!out.empty() && out.back().index == e.index) out.back().value += e.value;
        else out.push_back(e);
    }
    std::erase_if(out, [](const auto& e) { return e.value == 0.0; });
    return out;
}

double row_l1(const SparseRow& row) {
    double s = 0.0;
    for (const auto& e : row) s += std::abs(e.value);
    return s;
}

double row_l2(const SparseRow& row) {
    double s = 0.0;
    for (const auto& e : row) s += e.value * e.value;
    return std::sqrt(s);
}

double row_sum(const SparseRow& row) {
    double s = 0.0;
    for (const auto& e : row) s += e.value;
    return s;
}

namespace {

// Calls f(difference) for every index in the union of the two supports.
template <class F>
void merge_diff(const SparseRow& a, const SparseRow& b, F&& f) {
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) f(a[i++].value);
        else if (i == a.size() || b[j].index < a[i].index) f(-b[j++].value);
        else f(a[i++].value - b[j++].value);
    }
}

}  // namespace

double row_l1_distance(const SparseRow& a, const SparseRow& b) {
    double s = 0.0;
    merge_diff(a, b, [&](double d) { s += std::abs(d); });
    return s;
}

double row_l2_distance(const SparseRow& a, const SparseRow& b) {
    double s = 0.0;
    merge_diff(a, b, [&](double d) { s += d * d; });
    return std::sqrt(s);
}

KernelRows::KernelRows(std::vector<SparseRow> rows, const Metric& metric) : rows_(std::move(rows)) {
    if (rows_.size() != metric.size()) throw std::invalid_argument("kernel: row count differs from space size");
    for (Vertex x = 0; x < rows_.size(); ++x) {
        rows_[x] = canonical_row(std::move(rows_[x]));
        for (const auto& e : rows_[x]) {
            if (e.index >= rows_.size()) throw std::out_of_range("kernel: entry index out of range");
            if (!std::isfinite(e.value)) throw std::invalid_argument("kernel: non-finite entry");
            support_radius_ = std::max<std::size_t>(support_radius_, metric(x, e.index));
        }
    }
    for (Vertex x = 0; x < rows_.size(); ++x)
        for (const auto& e : rows_[x])
            symmetry_defect_ = std::max(symmetry_defect_, std::abs(e.value - value(e.index, x)));
}

double KernelRows::value(Vertex x, Vertex z) const {
    const auto& r = rows_[x];
    auto it = std::lower_bound(r.begin(), r.end(), z, [](const auto& e, Vertex v) { return e.index < v; });
    return it != r.end() && it->index == z ? it->value : 0.0;
}

std::vector<double> KernelRows::dense_row(Vertex x) const {
    std::vector<double> out(rows_.size(), 0.0);
    for (const auto& e : rows_[x]) out[e.index] = e.value;
    return out;
}

Kernel::Kernel(std::vector<SparseRow> rows, const Metric& metric) : KernelRows(std::move(rows), metric) {
    for (const auto& r : rows_) rowsum_dev_ = std::max(rowsum_dev_, std::abs(row_sum(r) - 1.0));
}

bool Kernel::is_nonnegative() const {
    for (const auto& r : rows_)
        for (const auto& e : r)
            if (e.value < 0.0) return false;
    return true;
}

L2Kernel::L2Kernel(std::vector<SparseRow> rows, const Metric& metric) : KernelRows(std::move(rows), metric) {
    for (const auto& r : rows_) norms_.push_back(row_l2(r));
}

VariationProfile variation(const KernelRows& k, const Metric& metric, std::size_t R, RowNorm norm) {
    VariationProfile out;
    out.radius = R;
    for (Vertex x = 0; x < k.size(); ++x) {
        for (Vertex y = 0; y < k.size(); ++y) {
            if (x == y || !metric.within(x, y, R)) continue;
            const double d = norm == RowNorm::L1 ? row_l1_distance(k.row(x), k.row(y))
                                                 : row_l2_distance(k.row(x), k.row(y));
            if (d > out.value) {
                out.value = d;
                out.argmax = {x, y};
            }
        }
    }
    return out;
}

RowSums rowsum_check(const Kernel& k) {
    RowSums out;
    for (const auto& r : k.rows()) {
        out.sums.push_back(row_sum(r));
        out.max_deviation = std::max(out.max_deviation, std::abs(out.sums.back() - 1.0));
    }
    return out;
}

Kernel delta_kernel(const Metric& metric) {
    std::vector<SparseRow> rows(metric.size());
    for (Vertex x = 0; x < metric.size(); ++x) rows[x] = {{x, 1.0}};
    return Kernel(std::move(rows), metric);
}

Kernel kernel_ball_average(const Metric& metric, std::size_t S) {
    std::vector<SparseRow> rows(metric.size());
    for (Vertex x = 0; x < metric.size(); ++x) {
        auto b = metric.ball(x, S);
        const double w = 1.0 / static_cast<double>(b.size());
        for (Vertex z : b) rows[x].push_back({z, w});
    }
    return Kernel(std::move(rows), metric);
}

Kernel kernel_lazy_walk(const Graph& g, const Metric& metric, std::size_t steps, double laziness) {
    if (!(laziness > 0.0 && laziness < 1.0)) throw std::invalid_argument("lazy walk: laziness must be in (0,1)");
    const std::size_t n = g.size();
    std::vector<SparseRow> rows(n);
    std::vector<double> p(n), next(n);
    for (Vertex x = 0; x < n; ++x) {
        std::fill(p.begin(), p.end(), 0.0);
        p[x] = 1.0;
        for (std::size_t s = 0; s < steps; ++s) {
            std::fill(next.begin(), next.end(), 0.0);
            for (Vertex w = 0; w < n; ++w) {
                if (p[w] == 0.0) continue;
                const auto nb = g.neighbors(w);
                if (nb.empty()) {
                    next[w] += p[w];
                    continue;
                }
                next[w] += laziness * p[w];
                const double share = (1.0 - laziness) * p[w] / static_cast<double>(nb.size());
                for (Vertex z : nb) next[z] += share;
            }
            std::swap(p, next);
        }
        for (Vertex z = 0; z < n; ++z)
            if (p[z] != 0.0) rows[x].push_back({z, p[z]});
    }
    return Kernel(std::move(rows), metric);
}

Kernel scaled(const Kernel& k, double factor, const Metric& metric) {
    std::vector<SparseRow> rows(k.rows().begin(), k.rows().end());
    for (auto& r : rows)
        for (auto& e : r) e.value *= factor;
    return Kernel(std::move(rows), metric);
}

}  // namespace xpa
