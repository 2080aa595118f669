#ifndef XPA_OBSTRUCTION_HPP
#define XPA_OBSTRUCTION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xpa/cheeger.hpp"
#include "xpa/cochains.hpp"
#include "xpa/family.hpp"
#include "xpa/graph.hpp"
#include "xpa/kernel.hpp"

namespace xpa {

/// Tolerance for every recorded inequality.
inline constexpr double kWitnessSlack = 1e-9;

/// Minimizer of z -> sum over directed edges (x0,x1) of |phi(x1)(z) - phi(x0)(z)|.
/// Sums within a relative 1e-12 of the minimum tie and go to the smallest z.
/// Throws std::invalid_argument when phi is not symmetric.
Vertex basepoint(const Kernel& phi, const Graph& g);

/// All edge sums, indexed by z.
std::vector<double> edge_sums(const Kernel& phi, const Graph& g);

/// lhs <= rhs, recorded with slack = rhs - lhs.
struct Inequality {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;

    double slack() const { return rhs - lhs; }
    bool holds(double tol = kWitnessSlack) const { return slack() >= -tol; }
};

enum class HSource { Exact, Spectral };

struct CheegerEstimate {
    double h = 0.0;
    HSource source = HSource::Exact;
};

/// Exact h up to `cap` vertices, the certified spectral lower bound above it.
/// A disconnected graph has h = 0.
CheegerEstimate cheeger_lower(const Graph& g, std::size_t cap = kDefaultExactCap);

struct WitnessReport {
    Vertex basepoint = 0;
    VertexFunction f;
    std::size_t n = 0;
    std::size_t support_radius = 0;
    std::size_t ball_size = 0;         ///< |B_S(e)|
    std::size_t k = 0;                 ///< maximum valency
    std::size_t directed_edges = 0;
    double sum_f = 0.0;
    double rowsum_e = 0.0;             ///< sum_z phi(e)(z)
    double row_l1_e = 0.0;             ///< ||phi(e)||_1
    double l1_norm = 0.0;
    double quotient_norm = 0.0;
    double coboundary_l1 = 0.0;
    std::optional<double> ratio;       ///< ||df||_1 / quotient norm, when it is positive
    double edge_sum_e = 0.0;           ///< sum over E of |phi(x1)(e) - phi(x0)(e)|
    double mean_edge_sum = 0.0;        ///< (1/n) sum_z of the same
    double max_edge_variation = 0.0;   ///< max over E of ||phi(x1) - phi(x0)||_1
    double variation_r1 = 0.0;         ///< V(phi, R = 1)
    CheegerEstimate h;
    double sharper_bound = 0.0;        ///< LB with |B_S(e)| and the actual |sum f|

    /// (a) sum f = rowsum(e) - 1, both directions
    std::vector<Inequality> sum_identity;
    /// (b) ||f||_1 <= ||phi(e)||_1 + 1
    Inequality norm_upper;
    /// (c) 1 - |B_S(e)|/n <= ||f||_1
    Inequality norm_lower;
    /// (d) ||df|| <= edge sum at e <= mean edge sum <= (|E|/n) max <= k V(R=1)
    std::vector<Inequality> coboundary_chain;
    /// 2h * quotient_norm <= ||df||_1
    Inequality gap_check;

    std::vector<Inequality> all() const;
    bool holds(double tol = kWitnessSlack) const;
};

/// f(x) = phi(x)(e) - 1/n at the best basepoint e, with every inequality of
/// the incompatibility argument evaluated. Throws std::invalid_argument when
/// phi is not symmetric or its size differs from the graph.
WitnessReport extract_witness(const Kernel& phi, const Graph& g, std::size_t cap = kDefaultExactCap);

struct LowerBound {
    double value = 0.0;
    CheegerEstimate h;
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t ball_size = 0;  ///< N_S = max_e |B_S(e)|
    double rowsum_dev = 0.0;
    bool vacuous = false;       ///< 1 - N_S/n - dev <= 0, or no edges
};

inline constexpr double kDefaultRowsumBudget = 0.01;

/// max(0, (h/k)(1 - N_S/n - dev)): every symmetric kernel with support
/// radius <= S and row-sum deviation <= dev has V(R=1) at least this.
LowerBound variation_lower_bound(const Graph& g, std::size_t S, double rowsum_dev = kDefaultRowsumBudget,
                                 std::size_t cap = kDefaultExactCap);

enum class Recipe { BallAverage, LazyWalk, Symmetrised, PropaSymmetric };

std::string to_string(Recipe r);
/// Throws std::invalid_argument on an unknown name.
Recipe parse_recipe(const std::string& name);

/// S = constant, or n / divisor when divisor > 0 (n = component size).
struct RadiusRule {
    std::size_t constant = 1;
    std::size_t divisor = 0;

    std::size_t at(std::size_t n) const { return divisor > 0 ? n / divisor : constant; }
};

/// Builds the recipe kernel on one component with support radius <= S.
Kernel recipe_kernel(Recipe recipe, const Graph& g, const Metric& metric, std::size_t S);

struct IncompatibilityRow {
    std::size_t index = 0;  ///< 1-based
    std::size_t n = 0;
    std::size_t S = 0;
    LowerBound bound;
    double achieved = 0.0;  ///< V(recipe kernel, R = 1)
    bool kernel_symmetric = false;
    double kernel_rowsum_dev = 0.0;
    /// LB at the kernel's own deviation; meaningful when the kernel is symmetric.
    double kernel_bound = 0.0;

    /// obstructed (LB >= floor) | weak (0 < LB < floor) | open (LB = 0) | vacuous
    std::string verdict(double floor) const;
};

struct IncompatibilityReport {
    std::string generator;
    Recipe recipe = Recipe::BallAverage;
    RadiusRule radius;
    double rowsum_dev = kDefaultRowsumBudget;
    std::vector<IncompatibilityRow> rows;
    double floor = 0.0;
    double inf_bound = 0.0;
    bool positive = false;    ///< inf LB > 0
    bool obstructed = false;  ///< inf LB >= floor
    bool vacuous = false;     ///< every row vacuous
    std::optional<double> achieved_slope;  ///< log V against log n
    std::optional<double> bound_slope;     ///< log LB against log n
};

/// Finite-horizon stand-in for "bounded away from zero": every finite
/// connected family has inf LB > 0, so the verdict asks for inf LB >= floor.
inline constexpr double kDefaultBoundFloor = 0.01;

struct IncompatibilityOptions {
    Recipe recipe = Recipe::BallAverage;
    RadiusRule radius;
    double rowsum_dev = kDefaultRowsumBudget;
    double floor = kDefaultBoundFloor;
    std::size_t cap = kDefaultExactCap;
};

/// Per-index lower bounds and recipe variations over a family laid out as a
/// coarse union. Throws std::invalid_argument when some S reaches the
/// isolation distance of its component (kernels would straddle components).
IncompatibilityReport family_incompatibility(const GraphFamily& family, const IncompatibilityOptions& options = {});

}  // namespace xpa

#endif
