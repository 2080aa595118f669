#ifndef XPA_KERNEL_HPP
#define XPA_KERNEL_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "xpa/graph.hpp"

namespace xpa {

struct KernelEntry {
    Vertex index;
    double value;
    friend bool operator==(const KernelEntry&, const KernelEntry&) = default;
};

/// Sparse row: entries sorted by index, no duplicates, no stored zeros.
using SparseRow = std::vector<KernelEntry>;

/// Sorts, merges duplicate indices and drops zeros.
SparseRow canonical_row(SparseRow row);

double row_l1(const SparseRow& row);
double row_l2(const SparseRow& row);
double row_sum(const SparseRow& row);
/// ||a - b||_1 and ||a - b||_2 over the union of supports.
double row_l1_distance(const SparseRow& a, const SparseRow& b);
double row_l2_distance(const SparseRow& a, const SparseRow& b);

inline constexpr double kSymmetryTol = 1e-12;

/// A map x -> row(x) on a finite metric space, with the support radius and
/// symmetry defect fixed at construction.
class KernelRows {
public:
    KernelRows() = default;
    KernelRows(std::vector<SparseRow> rows, const Metric& metric);

    std::size_t size() const { return rows_.size(); }
    const SparseRow& row(Vertex x) const { return rows_[x]; }
    std::span<const SparseRow> rows() const { return rows_; }
    double value(Vertex x, Vertex z) const;

    /// max over x of max d(x,z) with row(x)(z) != 0
    std::size_t support_radius() const { return support_radius_; }
    /// max |row(x)(z) - row(z)(x)|
    double symmetry_defect() const { return symmetry_defect_; }
    bool is_symmetric() const { return symmetry_defect_ <= kSymmetryTol; }

    std::vector<double> dense_row(Vertex x) const;

protected:
    std::vector<SparseRow> rows_;
    std::size_t support_radius_ = 0;
    double symmetry_defect_ = 0.0;
};

/// l1-valued kernel, the finite stand-in for x -> f(x) in Prob(X).
class Kernel : public KernelRows {
public:
    Kernel() = default;
    Kernel(std::vector<SparseRow> rows, const Metric& metric);

    /// max |sum_z row(x)(z) - 1|
    double rowsum_dev() const { return rowsum_dev_; }
    bool is_nonnegative() const;

private:
    double rowsum_dev_ = 0.0;
};

/// l2-valued kernel (rows in l2(X)).
class L2Kernel : public KernelRows {
public:
    L2Kernel() = default;
    L2Kernel(std::vector<SparseRow> rows, const Metric& metric);

    std::span<const double> row_norms() const { return norms_; }

private:
    std::vector<double> norms_;
};

enum class RowNorm { L1, L2 };

struct VariationProfile {
    std::size_t radius = 0;
    double value = 0.0;
    std::pair<Vertex, Vertex> argmax{0, 0};  ///< first maximizing ordered pair
};

/// max over ordered pairs with d(x,y) <= R of ||row(x) - row(y)||.
VariationProfile variation(const KernelRows& k, const Metric& metric, std::size_t R,
                           RowNorm norm = RowNorm::L1);

struct RowSums {
    std::vector<double> sums;
    double max_deviation = 0.0;  ///< max |sum - 1|
};

RowSums rowsum_check(const Kernel& k);

/// row(x) = delta_x
Kernel delta_kernel(const Metric& metric);
/// row(x) uniform on B_S(x)
Kernel kernel_ball_average(const Metric& metric, std::size_t S);
/// row(x) = t-step lazy walk from delta_x: stay with probability `laziness`,
/// otherwise move to a uniform neighbour. Requires 0 < laziness < 1.
Kernel kernel_lazy_walk(const Graph& g, const Metric& metric, std::size_t steps, double laziness);
/// Entrywise scaling, e.g. to build near-unital test kernels.
Kernel scaled(const Kernel& k, double factor, const Metric& metric);

}  // namespace xpa

#endif
