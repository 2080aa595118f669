#ifndef XPA_FAMILY_HPP
#define XPA_FAMILY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xpa/cheeger.hpp"
#include "xpa/graph.hpp"

namespace xpa {

struct GeneratorParams {
    std::size_t degree = 3;           ///< random_regular valency
    std::vector<std::string> files;   ///< from_files: one graph JSON per index
};

/// Finite horizon of a graph sequence. Position p holds index p + 1.
struct GraphFamily {
    std::string generator;
    std::vector<std::size_t> parameters;  ///< generator argument per index
    std::vector<Graph> graphs;

    std::size_t horizon() const { return graphs.size(); }
    std::size_t k_bound() const;
    std::vector<std::size_t> sizes() const;
};

/// Generators: cycle, path, complete, hypercube, margulis, random_regular
/// (parameter = n, valency from params, seed + n per index), from_files
/// (range indexes params.files). Throws std::invalid_argument on an unknown
/// generator, an empty or reversed range, or inconsistent params.
GraphFamily make_family(const std::string& generator, std::size_t first, std::size_t last,
                        const GeneratorParams& params = {}, std::uint64_t seed = 0);

/// separation between consecutive components, from the 1-based index i and
/// the diameters of components i and i+1.
using SpacingRule = std::function<std::uint64_t(std::size_t i, std::uint32_t diam_i, std::uint32_t diam_next)>;

/// max(diam_i, diam_{i+1}) + i + 1
std::uint64_t default_spacing(std::size_t i, std::uint32_t diam_i, std::uint32_t diam_next);

/// Disjoint union of a family laid out on a line: inside a component the
/// hop metric, across components the sum of the separations in between.
/// Separations are forced strictly increasing (each at least the previous
/// one plus one), so every component drifts away from the rest.
class UnionSpace {
public:
    explicit UnionSpace(const GraphFamily& family, const SpacingRule& rule = default_spacing);

    std::size_t num_components() const { return metrics_.size(); }
    std::size_t size() const { return offsets_.back(); }
    std::size_t offset(std::size_t component) const { return offsets_[component]; }
    std::size_t component_of(std::size_t point) const;
    std::uint32_t diameter(std::size_t component) const { return diameters_[component]; }

    /// Distance between component c and c+1 (0-based).
    std::uint64_t separation(std::size_t c) const { return separations_[c]; }
    /// d(component c, rest); kUnreachable for a single component.
    std::uint64_t isolation(std::size_t c) const;
    /// Balls of radius S around points of component c stay inside it.
    bool localizes(std::size_t c, std::size_t S) const { return S < isolation(c); }

    std::uint64_t distance(std::size_t p, std::size_t q) const;
    const Metric& component_metric(std::size_t c) const { return metrics_[c]; }
    /// Dense metric on all points; throws std::overflow_error when a distance
    /// does not fit the 32-bit representation.
    Metric metric() const;

private:
    std::vector<Metric> metrics_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::uint32_t> diameters_;
    std::vector<std::uint64_t> separations_;
};

struct FamilyDiagnostic {
    std::vector<std::size_t> sizes;
    std::vector<double> margins;             ///< gap_i = 2 h_i
    std::vector<std::optional<Ratio>> exact; ///< exact gap_i where h_i was enumerated
    std::vector<bool> heuristic;             ///< sweep upper bound used
    double threshold = 0.0;
    double inf_margin = 0.0;
    std::optional<double> decay_exponent;    ///< slope of log m_i against log n_i
    bool sizes_increasing = false;
    bool expander_consistent = false;
    bool any_heuristic = false;

    std::size_t horizon() const { return margins.size(); }
};

inline constexpr double kDefaultMarginThreshold = 0.5;

/// Per-index l1 gaps and the finite-horizon expander verdict: consistent iff
/// every margin is at least `threshold` and sizes strictly increase. Graphs
/// above `cap` fall back to the sweep bound and mark the verdict heuristic.
/// horizon 0 means the whole family.
FamilyDiagnostic expander_verdict(const GraphFamily& family, std::size_t horizon = 0,
                                  double threshold = kDefaultMarginThreshold,
                                  std::size_t cap = kDefaultExactCap);

/// min(margins) >= tol. Throws std::invalid_argument on an empty list.
bool bounded_below_margin(std::span<const double> margins, double tol);

/// Least-squares slope of log(y) against log(x); nullopt with fewer than two
/// usable points or any non-positive value.
std::optional<double> log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace xpa

#endif
