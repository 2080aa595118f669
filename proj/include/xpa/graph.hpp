#ifndef XPA_GRAPH_HPP
#define XPA_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace xpa {

using Vertex = std::size_t;
using DirectedEdge = std::pair<Vertex, Vertex>;

/// Finite simple graph stored with directed edges: every undirected pair
/// {u,v} appears as both (u,v) and (v,u). Immutable after construction.
class Graph {
public:
    Graph() = default;

    std::size_t size() const { return n_; }
    std::size_t num_directed_edges() const { return edges_.size(); }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const { return k_max_; }

    /// Directed edges sorted lexicographically; EdgeFunction values align
    /// with this order.
    std::span<const DirectedEdge> directed_edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    /// Undirected pairs (u < v), one per edge, in sorted order.
    std::vector<DirectedEdge> undirected_edges() const;

    bool has_edge(Vertex u, Vertex v) const;
    bool is_connected() const;

    /// Connected component label per vertex; labels follow the smallest
    /// vertex of each component.
    std::vector<std::size_t> components() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph build_graph(std::size_t n, std::span<const DirectedEdge> undirected);

    std::size_t n_ = 0;
    std::vector<DirectedEdge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
    std::size_t k_max_ = 0;
};

/// Emits each listed pair in both directions, drops loops and duplicates.
/// Throws std::out_of_range on a vertex index >= n.
Graph build_graph(std::size_t n, std::span<const DirectedEdge> undirected);

inline Graph build_graph(std::size_t n, const std::vector<DirectedEdge>& undirected) {
    return build_graph(n, std::span<const DirectedEdge>(undirected));
}

/// Disjoint union; vertices of `b` are shifted by a.size().
Graph disjoint_union(const Graph& a, const Graph& b);

// Generators. Each throws std::invalid_argument below its minimum size.
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph hypercube(std::size_t d);

/// Gabber-Galil style expander on Z_n x Z_n, vertex (x,y) -> x*n + y.
/// Generators (x, y+2x), (x, y+2x+1), (x+2y, y), (x+2y+1, y) and their
/// inverses, collapsed to a simple graph.
Graph margulis(std::size_t n);

/// Configuration-model k-regular simple graph. Deterministic in `seed`.
/// Throws std::invalid_argument on n*k odd or k >= n, std::runtime_error
/// when no simple pairing is found within the resampling budget.
Graph random_regular(std::size_t n, std::size_t k, std::uint64_t seed,
                     std::size_t max_attempts = 10000);

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Dense all-pairs hop metric. Unreachable pairs hold kUnreachable and are
/// never used in arithmetic.
class Metric {
public:
    Metric() = default;
    explicit Metric(const Graph& g);
    Metric(std::size_t n, std::vector<std::uint32_t> dist);

    std::size_t size() const { return n_; }
    std::uint32_t operator()(Vertex x, Vertex y) const { return dist_[x * n_ + y]; }
    bool within(Vertex x, Vertex y, std::size_t r) const {
        auto d = (*this)(x, y);
        return d != kUnreachable && d <= r;
    }

    /// Largest finite distance.
    std::uint32_t diameter() const;

    /// {y : d(x,y) <= r}, ascending.
    std::vector<Vertex> ball(Vertex x, std::size_t r) const;

    /// max_x |B_r(x)|
    std::size_t max_ball_size(std::size_t r) const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> dist_;
};

/// {y : d(x,y) <= r} by truncated BFS, ascending.
std::vector<Vertex> ball(const Graph& g, Vertex x, std::size_t r);

}  // namespace xpa

#endif
