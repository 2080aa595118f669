#ifndef XPA_LP_HPP
#define XPA_LP_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace xpa {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
    std::vector<std::pair<std::size_t, double>> terms;  ///< (variable, coefficient)
    Sense sense = Sense::LessEqual;
    double rhs = 0.0;
};

/// minimize cost . x  subject to constraints, x >= 0.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<double> cost;
    std::vector<LinearConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
    LpStatus status = LpStatus::IterationLimit;
    double objective = 0.0;
    std::vector<double> x;
    /// One multiplier per constraint: <= 0 on <= rows, >= 0 on >= rows.
    std::vector<double> duals;
    std::size_t pivots = 0;
};

struct SimplexOptions {
    double pivot_tol = 1e-9;
    double feasibility_tol = 1e-9;
    std::size_t max_pivots = 200000;
    /// Degenerate pivots tolerated before switching from Dantzig's rule to
    /// Bland's rule.
    std::size_t degenerate_limit = 50;
    /// Relative loosening of <= rows against degeneracy; the final basis is
    /// re-evaluated on the exact right-hand side. 0 disables it.
    double perturbation = 1e-7;
};

/// Dense two-phase tableau simplex whose state survives between solves:
/// variables and inequality rows appended after an optimal solve are
/// absorbed into the current basis, and the next solve() restarts from it
/// with dual simplex pivots.
class IncrementalSimplex {
public:
    explicit IncrementalSimplex(LinearProgram lp, const SimplexOptions& options = {});

    const LinearProgram& program() const { return lp_; }

    /// New variable with zero coefficients in every existing row; returns
    /// its index.
    std::size_t add_variable(double cost);
    /// Appends a <= or >= row. Throws std::invalid_argument on an equality
    /// or an unknown variable.
    void add_constraint(LinearConstraint row);

    LpSolution solve();

private:
    enum class Kind { Structural, Slack, Artificial };

    void build();
    void add_column(Kind kind, std::size_t var);
    void pivot(std::size_t r, std::size_t c);
    void price(const std::vector<double>& column_cost);
    std::vector<double> phase_two_cost() const;
    LpStatus primal(bool allow_artificial, std::size_t& pivots);
    LpStatus dual(std::size_t& pivots);
    double perturbed(std::size_t row, double rhs) const;
    LpSolution extract(std::size_t pivots);

    LinearProgram lp_;
    SimplexOptions opt_;
    bool built_ = false;
    bool optimal_ = false;

    std::vector<std::vector<double>> a_;  // one tableau row per constraint
    std::vector<double> rhs_;
    std::vector<double> d_;               // reduced costs
    double neg_obj_ = 0.0;
    std::vector<Kind> kind_;              // per column
    std::vector<std::size_t> var_col_;    // structural variable -> column
    std::vector<std::size_t> col_var_;    // column -> structural variable
    std::vector<std::size_t> basis_;      // row -> column
    std::vector<std::size_t> identity_col_;
    std::vector<double> sign_;
    std::vector<std::size_t> nz_;
};

/// One-shot solve.
LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

/// Weak-duality bound b.y - sum_j max(0, (A^T y - c)_j) * upper_j, valid for
/// every feasible x with x <= upper. Multipliers with the wrong sign are
/// clipped to zero first.
double dual_bound(const LinearProgram& lp, std::span<const double> duals,
                  std::span<const double> upper);

}  // namespace xpa

#endif
