#include "xpa/cheeger.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <string>
#include <thread>

#include "xpa/dense.hpp"

namespace xpa {

namespace {

struct Candidate {
    std::uint64_t boundary = 0;
    std::uint64_t size = 0;
    std::uint64_t mask = 0;
    bool valid = false;
};

// Strict total order: ratio, then |F|, then bitmask value.
bool better(const Candidate& a, const Candidate& b) {
    if (!a.valid) return false;
    if (!b.valid) return true;
    const auto lhs = static_cast<unsigned __int128>(a.boundary) * b.size;
    const auto rhs = static_cast<unsigned __int128>(b.boundary) * a.size;
    if (lhs != rhs) return lhs < rhs;
    if (a.size != b.size) return a.size < b.size;
    return a.mask < b.mask;
}

// Walks the 2^low_bits masks sharing `prefix` in Gray-code order.
Candidate search_chunk(const Graph& g, unsigned low_bits, std::uint64_t prefix) {
    const std::size_t n = g.size();
    const std::uint64_t half = n / 2;
    std::uint64_t mask = prefix << low_bits;
    std::vector<char> in(n);
    for (Vertex v = 0; v < n; ++v) in[v] = static_cast<char>(mask >> v & 1);
    std::uint64_t size = static_cast<std::uint64_t>(std::popcount(mask));
    std::uint64_t boundary = 0;
    for (auto [u, v] : g.directed_edges()) boundary += in[u] != in[v];

    Candidate best;
    auto consider = [&] {
        if (size == 0 || size > half) return;
        Candidate c{boundary, size, mask, true};
        if (better(c, best)) best = c;
    };
    consider();
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t i = 1; i < steps; ++i) {
        const auto v = static_cast<Vertex>(std::countr_zero(i));
        // Each neighbour on the same side becomes a crossing pair of directed
        // edges, each one on the other side stops crossing.
        std::int64_t delta = 0;
        for (Vertex w : g.neighbors(v)) delta += in[w] == in[v] ? 2 : -2;
        boundary = static_cast<std::uint64_t>(static_cast<std::int64_t>(boundary) + delta);
        in[v] ^= 1;
        size = in[v] ? size + 1 : size - 1;
        mask ^= std::uint64_t{1} << v;
        consider();
    }
    return best;
}

CutResult to_cut(const Candidate& c, std::size_t n) {
    CutResult out;
    for (Vertex v = 0; v < n; ++v)
        if (c.mask >> v & 1) out.subset.push_back(v);
    out.boundary_size = c.boundary;
    return out;
}

DenseMatrix laplacian(const Graph& g) {
    DenseMatrix l(g.size(), g.size());
    for (Vertex v = 0; v < g.size(); ++v) l(v, v) = static_cast<double>(g.degree(v));
    for (auto [u, v] : g.directed_edges()) l(u, v) = -1.0;
    return l;
}

}  // namespace

CutResult cheeger_exact(const Graph& g, std::size_t cap, unsigned threads) {
    const std::size_t n = g.size();
    if (n < 2) throw std::invalid_argument("cheeger_exact: need at least 2 vertices");
    if (n > cap || n > 62)
        throw CapExceeded("cheeger_exact: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));

    auto label = g.components();
    if (std::any_of(label.begin(), label.end(), [](auto l) { return l != 0; })) {
        std::vector<std::size_t> count(n, 0);
        for (auto l : label) ++count[l];
        std::size_t pick = 0;
        for (std::size_t l = 0; l < n; ++l)
            if (count[l] > 0 && (count[pick] == 0 || count[l] < count[pick])) pick = l;
        CutResult out;
        for (Vertex v = 0; v < n; ++v)
            if (label[v] == pick) out.subset.push_back(v);
        out.disconnected = true;
        return out;
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (n < 16) threads = 1;
    unsigned prefix_bits = 0;
    while (prefix_bits + 1 < n && (1u << prefix_bits) < 4 * threads) ++prefix_bits;
    if (threads == 1) prefix_bits = 0;
    const unsigned low_bits = static_cast<unsigned>(n) - prefix_bits;
    const std::uint64_t chunks = std::uint64_t{1} << prefix_bits;

    std::vector<Candidate> local(threads);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&](unsigned id) {
        for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
            auto cand = search_chunk(g, low_bits, c);
            if (better(cand, local[id])) local[id] = cand;
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    }
    Candidate best;
    for (const auto& c : local)
        if (better(c, best)) best = c;
    return to_cut(best, n);
}

double algebraic_connectivity(const Graph& g) {
    if (g.size() < 2) throw std::invalid_argument("algebraic_connectivity: need at least 2 vertices");
    return jacobi_eigen(laplacian(g)).values[1];
}

double cheeger_spectral_lower_bound(const Graph& g) {
    const std::size_t n = g.size();
    if (n < 2) throw std::invalid_argument("cheeger_spectral_lower_bound: need at least 2 vertices");
    auto eig = jacobi_eigen(laplacian(g));
    const double margin = 1e-9 * std::max(1.0, eig.values.back());
    const double bound = eig.values[1] * static_cast<double>(n - n / 2) / static_cast<double>(n);
    return std::max(0.0, bound - margin);
}

CutResult cheeger_sweep(const Graph& g) {
    const std::size_t n = g.size();
    if (n < 2) throw std::invalid_argument("cheeger_sweep: need at least 2 vertices");
    auto eig = jacobi_eigen(laplacian(g));
    auto fiedler = eig.vectors.column(1);

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return fiedler[a] < fiedler[b]; });

    // Candidate.mask holds the sweep direction here.
    Candidate best;
    std::size_t best_len = 0;
    for (std::uint64_t direction = 0; direction < 2; ++direction) {
        std::vector<char> in(n, 0);
        std::uint64_t boundary = 0;
        for (std::size_t k = 0; k < n / 2; ++k) {
            const Vertex v = direction == 0 ? order[k] : order[n - 1 - k];
            std::int64_t delta = 0;
            for (Vertex w : g.neighbors(v)) delta += in[w] ? -2 : 2;
            boundary = static_cast<std::uint64_t>(static_cast<std::int64_t>(boundary) + delta);
            in[v] = 1;
            Candidate c{boundary, k + 1, direction, true};
            if (better(c, best)) {
                best = c;
                best_len = k + 1;
            }
        }
    }

    CutResult out;
    for (std::size_t k = 0; k < best_len; ++k)
        out.subset.push_back(best.mask == 0 ? order[k] : order[n - 1 - k]);
    std::sort(out.subset.begin(), out.subset.end());
    out.boundary_size = best.boundary;
    out.upper_bound = true;
    return out;
}

GapResult l1_gap(const Graph& g, std::size_t cap) {
    GapResult out;
    out.cut = cheeger_exact(g, cap);
    out.gap = out.cut.ratio();
    out.witness = VertexFunction::indicator(g.size(), out.cut.subset);
    return out;
}

bool check_expander(const Graph& g, std::size_t k, double eps, std::size_t cap) {
    if (g.max_degree() > k) return false;
    if (eps <= 0.0) return true;
    if (g.size() <= cap) return cheeger_exact(g, cap).h().value() >= eps;
    // Above the cap the answer is decided when the certified spectral lower
    // bound and the sweep upper bound fall on the same side of eps.
    if (cheeger_sweep(g).h().value() < eps) return false;
    if (cheeger_spectral_lower_bound(g) >= eps) return true;
    throw CapExceeded("check_expander: undecided above exact cap");
}

}  // namespace xpa
