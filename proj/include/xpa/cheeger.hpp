#ifndef XPA_CHEEGER_HPP
#define XPA_CHEEGER_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "xpa/cochains.hpp"
#include "xpa/errors.hpp"
#include "xpa/graph.hpp"

namespace xpa {

/// Non-negative rational num/den compared by cross multiplication.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return static_cast<unsigned __int128>(a.num) * b.den ==
               static_cast<unsigned __int128>(b.num) * a.den;
    }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        return static_cast<unsigned __int128>(a.num) * b.den <=>
               static_cast<unsigned __int128>(b.num) * a.den;
    }
    friend Ratio operator*(std::uint64_t k, const Ratio& r) { return {k * r.num, r.den}; }
};

inline constexpr std::size_t kDefaultExactCap = 24;

/// A vertex subset F with its directed coboundary |dF|.
struct CutResult {
    std::vector<Vertex> subset;      ///< ascending
    std::size_t boundary_size = 0;   ///< directed edges with exactly one end in F
    bool upper_bound = false;        ///< true when produced by a heuristic
    bool disconnected = false;       ///< F is a whole component, h = 0

    std::size_t size() const { return subset.size(); }
    /// |dF| / |F|
    Ratio ratio() const { return {boundary_size, subset.size()}; }
    /// h = |dF| / (2|F|)
    Ratio h() const { return {boundary_size, 2 * subset.size()}; }
};

/// Exact Cheeger constant by Gray-code enumeration of every F with
/// 1 <= |F| <= n/2, boundary sizes updated incrementally per flipped vertex.
/// The search splits across `threads` workers by bitmask prefix (0 = hardware
/// concurrency). Ties: smallest |F|, then smallest bitmask.
/// Disconnected graphs report h = 0 with the smallest component as the cut.
/// Throws std::invalid_argument for n < 2 and CapExceeded for n > cap.
CutResult cheeger_exact(const Graph& g, std::size_t cap = kDefaultExactCap, unsigned threads = 0);

/// Fiedler-vector sweep: best prefix cut of the vertices sorted by the
/// second Laplacian eigenvector, from either end. The result is an upper
/// bound on h.
CutResult cheeger_sweep(const Graph& g);

/// Second-smallest eigenvalue of the combinatorial Laplacian D - A.
double algebraic_connectivity(const Graph& g);

/// Certified lower bound h >= lambda_2 * ceil(n/2) / n (from
/// |dF|_undirected >= lambda_2 |F||F^c| / n), reduced by a round-off margin.
double cheeger_spectral_lower_bound(const Graph& g);

struct GapResult {
    Ratio gap;              ///< inf ||df||_1 / ||f||_{l1/R} = 2h
    CutResult cut;
    VertexFunction witness; ///< chi_F attaining the infimum
};

/// l1 coboundary gap of a connected graph via the exact Cheeger cut.
GapResult l1_gap(const Graph& g, std::size_t cap = kDefaultExactCap);

/// k_max <= k and h >= eps. eps <= 0 skips the Cheeger computation. Above
/// the exact cap, spectral and sweep bounds decide when they can; otherwise
/// CapExceeded.
bool check_expander(const Graph& g, std::size_t k, double eps, std::size_t cap = kDefaultExactCap);

}  // namespace xpa

#endif
