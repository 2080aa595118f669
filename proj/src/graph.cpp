#include "xpa/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace xpa {

Graph build_graph(std::size_t n, std::span<const DirectedEdge> undirected) {
    Graph g;
    g.n_ = n;
    g.edges_.reserve(2 * undirected.size());
    for (auto [u, v] : undirected) {
        if (u >= n || v >= n) {
            throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for n=" + std::to_string(n));
        }
        if (u == v) continue;
        g.edges_.emplace_back(u, v);
        g.edges_.emplace_back(v, u);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.offsets_.assign(n + 1, 0);
    for (auto [u, v] : g.edges_) ++g.offsets_[u + 1];
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    g.adjacency_.reserve(g.edges_.size());
    for (auto [u, v] : g.edges_) g.adjacency_.push_back(v);
    for (Vertex v = 0; v < n; ++v) g.k_max_ = std::max(g.k_max_, g.degree(v));
    return g;
}

std::vector<DirectedEdge> Graph::undirected_edges() const {
    std::vector<DirectedEdge> out;
    out.reserve(edges_.size() / 2);
    for (auto e : edges_)
        if (e.first < e.second) out.push_back(e);
    return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::size_t> Graph::components() const {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> label(n_, unset);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
        if (label[s] != unset) continue;
        label[s] = s;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : neighbors(u)) {
                if (label[w] == unset) {
                    label[w] = s;
                    stack.push_back(w);
                }
            }
        }
    }
    return label;
}

bool Graph::is_connected() const {
    auto label = components();
    return std::all_of(label.begin(), label.end(), [](std::size_t l) { return l == 0; });
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.undirected_edges();
    for (auto [u, v] : b.undirected_edges()) edges.emplace_back(u + a.size(), v + a.size());
    return build_graph(a.size() + b.size(), edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<DirectedEdge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

Graph path(std::size_t n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<DirectedEdge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph complete(std::size_t n) {
    if (n < 1) throw std::invalid_argument("complete needs n >= 1");
    std::vector<DirectedEdge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

Graph hypercube(std::size_t d) {
    if (d < 1) throw std::invalid_argument("hypercube needs d >= 1");
    if (d > 20) throw std::invalid_argument("hypercube dimension too large");
    const std::size_t n = std::size_t{1} << d;
    std::vector<DirectedEdge> e;
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t b = 0; b < d; ++b)
            if (!(v >> b & 1)) e.emplace_back(v, v | (std::size_t{1} << b));
    return build_graph(n, e);
}

Graph margulis(std::size_t n) {
    if (n < 2) throw std::invalid_argument("margulis needs n >= 2");
    auto id = [n](std::size_t x, std::size_t y) { return (x % n) * n + (y % n); };
    std::vector<DirectedEdge> e;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const Vertex u = id(x, y);
            // Forward images; inverses are covered by the undirected pairing.
            e.emplace_back(u, id(x, y + 2 * x));
            e.emplace_back(u, id(x, y + 2 * x + 1));
            e.emplace_back(u, id(x + 2 * y, y));
            e.emplace_back(u, id(x + 2 * y + 1, y));
        }
    }
    return build_graph(n * n, e);
}

Graph random_regular(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t max_attempts) {
    if ((n * k) % 2 != 0) throw std::invalid_argument("random_regular: n*k must be even");
    if (k >= n) throw std::invalid_argument("random_regular: need k < n");
    std::mt19937_64 rng(seed);
    // Explicit Fisher-Yates with rejection sampling keeps the output identical
    // across standard library implementations.
    auto below = [&rng](std::uint64_t bound) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t r;
        do { r = rng(); } while (r >= limit);
        return r % bound;
    };
    std::vector<Vertex> stubs;
    stubs.reserve(n * k);
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t j = 0; j < k; ++j) stubs.push_back(v);

    std::vector<DirectedEdge> e;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[below(i)]);
        e.clear();
        bool simple = true;
        for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
            auto u = std::min(stubs[i], stubs[i + 1]);
            auto v = std::max(stubs[i], stubs[i + 1]);
            if (u == v) simple = false;
            e.emplace_back(u, v);
        }
        if (!simple) continue;
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) continue;
        return build_graph(n, e);
    }
    throw std::runtime_error("random_regular: resampling budget exhausted");
}

namespace {

void bfs_row(const Graph& g, Vertex s, std::span<std::uint32_t> row, std::size_t limit) {
    std::fill(row.begin(), row.end(), kUnreachable);
    std::deque<Vertex> queue{s};
    row[s] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (row[u] >= limit) continue;
        for (Vertex w : g.neighbors(u)) {
            if (row[w] == kUnreachable) {
                row[w] = row[u] + 1;
                queue.push_back(w);
            }
        }
    }
}

}  // namespace

Metric::Metric(const Graph& g) : n_(g.size()), dist_(g.size() * g.size()) {
    for (Vertex s = 0; s < n_; ++s)
        bfs_row(g, s, std::span(dist_).subspan(s * n_, n_), std::numeric_limits<std::size_t>::max());
}

Metric::Metric(std::size_t n, std::vector<std::uint32_t> dist) : n_(n), dist_(std::move(dist)) {
    if (dist_.size() != n * n) throw std::invalid_argument("Metric: distance matrix size mismatch");
}

std::uint32_t Metric::diameter() const {
    std::uint32_t d = 0;
    for (auto v : dist_)
        if (v != kUnreachable) d = std::max(d, v);
    return d;
}

std::vector<Vertex> Metric::ball(Vertex x, std::size_t r) const {
    std::vector<Vertex> out;
    for (Vertex y = 0; y < n_; ++y)
        if (within(x, y, r)) out.push_back(y);
    return out;
}

std::size_t Metric::max_ball_size(std::size_t r) const {
    std::size_t best = 0;
    for (Vertex x = 0; x < n_; ++x) {
        std::size_t count = 0;
        for (Vertex y = 0; y < n_; ++y) count += within(x, y, r);
        best = std::max(best, count);
    }
    return best;
}

std::vector<Vertex> ball(const Graph& g, Vertex x, std::size_t r) {
    std::vector<std::uint32_t> row(g.size());
    bfs_row(g, x, row, r);
    std::vector<Vertex> out;
    for (Vertex y = 0; y < g.size(); ++y)
        if (row[y] != kUnreachable && row[y] <= r) out.push_back(y);
    return out;
}

}  // namespace xpa
