#ifndef XPA_PROPERTY_A_HPP
#define XPA_PROPERTY_A_HPP

#include <cstddef>

#include "xpa/graph.hpp"
#include "xpa/kernel.hpp"
#include "xpa/lp.hpp"

namespace xpa {

struct PropaOptions {
    bool symmetric = false;
    double tol = 1e-9;               ///< target upper - lower
    std::size_t variable_cap = 2000; ///< cap on n * max |B_S(x)|
    std::size_t max_rounds = 2000;
    SimplexOptions simplex;
};

/// Two-sided certificate: `kernel` is feasible with variation `upper`, and
/// `lower` is a weak-duality bound valid for every feasible kernel.
struct PropaResult {
    double value = 0.0;  ///< V* (= upper)
    double upper = 0.0;
    double lower = 0.0;
    Kernel kernel;
    VariationProfile profile;
    std::size_t rounds = 0;
    std::size_t cuts = 0;  ///< pairs whose l1 constraint was added
    std::size_t pivots = 0;

    double gap() const { return upper - lower; }
};

/// Minimum of V(phi, R) over kernels with nonnegative rows summing to 1,
/// supported in B_S(x), optionally symmetric. Pair constraints are
/// generated lazily: each round adds, for every pair (x,y) whose variation
/// exceeds the current level t, the exact block phi(x)(z) - phi(y)(z) <= w_z,
/// 2 sum_z w_z <= t (equal row sums make this the l1 distance). Throws
/// CapExceeded above the variable cap and
/// std::runtime_error if the LP solver fails.
PropaResult propa_optimum(const Metric& metric, std::size_t R, std::size_t S,
                          const PropaOptions& options = {});

inline PropaResult propa_optimum(const Graph& g, std::size_t R, std::size_t S,
                                 const PropaOptions& options = {}) {
    return propa_optimum(Metric(g), R, S, options);
}

}  // namespace xpa

#endif
