#ifndef XPA_COCHAINS_HPP
#define XPA_COCHAINS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "xpa/graph.hpp"

namespace xpa {

/// Real 0-cochain: one value per vertex.
class VertexFunction {
public:
    VertexFunction() = default;
    explicit VertexFunction(std::vector<double> values);
    static VertexFunction constant(std::size_t n, double c) {
        return VertexFunction(std::vector<double>(n, c));
    }
    /// Characteristic function of `subset` on n vertices.
    static VertexFunction indicator(std::size_t n, std::span<const Vertex> subset);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const { return values_; }

    double l1_norm() const;
    double sum() const;

private:
    std::vector<double> values_;
};

/// Real 1-cochain, one value per directed edge in Graph::directed_edges()
/// order.
class EdgeFunction {
public:
    EdgeFunction() = default;
    explicit EdgeFunction(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const { return values_; }

    double l1_norm() const;
    double sum() const;
    bool is_zero_sum() const { return sum() == 0.0; }
    bool is_zero_sum(double tol) const;

private:
    std::vector<double> values_;
};

struct QuotientNorm {
    double value = 0.0;
    double shift = 0.0;  ///< minimizing c in inf_c ||f + c||_1
};

/// inf over real c of ||f + c||_1. The minimizer is minus a median; when the
/// median is an interval the smallest minimizing c is returned.
QuotientNorm quotient_norm(const VertexFunction& f);

/// df(u,v) = f(v) - f(u) for each directed edge (u,v).
EdgeFunction coboundary(const Graph& g, const VertexFunction& f);

/// f minus its mean; the image has zero sum.
VertexFunction mean_center(const VertexFunction& f);

/// Number of directed edges with exactly one endpoint in `subset`.
std::size_t boundary_size(const Graph& g, std::span<const Vertex> subset);

struct LevelSet {
    double weight = 0.0;          ///< a_j > 0
    std::vector<Vertex> members;  ///< F_j, ascending
};

/// Writes a strictly positive f as sum_j a_j chi_{F_j} with F_1 c F_2 c ...
/// (smallest set first). Throws std::invalid_argument on a non-positive
/// entry.
std::vector<LevelSet> coarea_decompose(const VertexFunction& f);

/// Reassembles sum_j a_j chi_{F_j} on n vertices.
VertexFunction reconstruct(std::size_t n, std::span<const LevelSet> levels);

/// One cochain per family index, with the sup-l1 norm over the finite
/// horizon.
template <class Cochain>
class FamilyCochain {
public:
    FamilyCochain() = default;
    explicit FamilyCochain(std::vector<Cochain> parts) : parts_(std::move(parts)) {}

    std::size_t horizon() const { return parts_.size(); }
    const Cochain& operator[](std::size_t i) const { return parts_[i]; }
    std::span<const Cochain> parts() const { return parts_; }

    double sup_l1() const {
        double s = 0.0;
        for (const auto& p : parts_) s = std::max(s, p.l1_norm());
        return s;
    }

    /// Per-index sums (sigma_0 for vertex cochains, sigma_1 for edge ones).
    std::vector<double> sums() const {
        std::vector<double> out;
        out.reserve(parts_.size());
        for (const auto& p : parts_) out.push_back(p.sum());
        return out;
    }

    /// Membership in ker(sigma): exact, or with |sum| <= tol per index.
    bool is_cochain() const { return is_cochain(0.0); }
    bool is_cochain(double tol) const {
        for (double s : sums())
            if (std::abs(s) > tol) return false;
        return true;
    }

private:
    std::vector<Cochain> parts_;
};

using FamilyVertexFunction = FamilyCochain<VertexFunction>;
using FamilyEdgeFunction = FamilyCochain<EdgeFunction>;

inline std::vector<double> sigma0(const FamilyVertexFunction& f) { return f.sums(); }
inline std::vector<double> sigma1(const FamilyEdgeFunction& f) { return f.sums(); }

}  // namespace xpa

#endif
