#include "xpa/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace xpa {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

IncrementalSimplex::IncrementalSimplex(LinearProgram lp, const SimplexOptions& options)
    : lp_(std::move(lp)), opt_(options) {
    if (lp_.cost.size() != lp_.num_vars) throw std::invalid_argument("solve_lp: cost size mismatch");
    for (const auto& c : lp_.constraints)
        for (const auto& [j, a] : c.terms)
            if (j >= lp_.num_vars) throw std::invalid_argument("solve_lp: variable index out of range");
}

// Deterministic, row-dependent loosening of <= rows breaks the ties that
// make zero-rhs programs stall.
double IncrementalSimplex::perturbed(std::size_t row, double rhs) const {
    if (opt_.perturbation <= 0.0) return rhs;
    return rhs + opt_.perturbation * std::max(1.0, std::abs(rhs)) *
                     (1.0 + std::fmod(0.6180339887498949 * static_cast<double>(row + 1), 1.0));
}

void IncrementalSimplex::add_column(Kind kind, std::size_t var) {
    for (auto& row : a_) row.push_back(0.0);
    d_.push_back(0.0);
    kind_.push_back(kind);
    col_var_.push_back(var);
}

void IncrementalSimplex::build() {
    const std::size_t n = lp_.num_vars, m = lp_.constraints.size();
    a_.assign(m, {});
    rhs_.assign(m, 0.0);
    d_.clear();
    kind_.clear();
    col_var_.clear();
    var_col_.assign(n, kNone);
    basis_.assign(m, kNone);
    identity_col_.assign(m, kNone);
    sign_.assign(m, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        var_col_[j] = j;
        add_column(Kind::Structural, j);
    }
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp_.constraints[i];
        Sense sense = c.sense;
        if (c.rhs < 0.0) {
            sign_[i] = -1.0;
            if (sense == Sense::LessEqual) sense = Sense::GreaterEqual;
            else if (sense == Sense::GreaterEqual) sense = Sense::LessEqual;
        }
        for (const auto& [j, v] : c.terms) a_[i][j] += sign_[i] * v;
        rhs_[i] = sign_[i] * c.rhs;
        if (sense == Sense::LessEqual) rhs_[i] = perturbed(i, rhs_[i]);
        if (sense != Sense::Equal) {
            add_column(Kind::Slack, kNone);
            a_[i].back() = sense == Sense::LessEqual ? 1.0 : -1.0;
            if (sense == Sense::LessEqual) {
                basis_[i] = identity_col_[i] = d_.size() - 1;
                continue;
            }
        }
        add_column(Kind::Artificial, kNone);
        a_[i].back() = 1.0;
        basis_[i] = identity_col_[i] = d_.size() - 1;
    }
    built_ = true;
    optimal_ = false;
}

void IncrementalSimplex::pivot(std::size_t r, std::size_t c) {
    auto& prow = a_[r];
    const double p = prow[c];
    nz_.clear();
    for (std::size_t j = 0; j < prow.size(); ++j) {
        if (prow[j] == 0.0) continue;
        prow[j] /= p;
        nz_.push_back(j);
    }
    prow[c] = 1.0;
    rhs_[r] /= p;
    // Tableaux of these programs stay sparse, so only the pivot row's
    // nonzero columns are touched.
    auto eliminate = [&](std::vector<double>& row, double& rhs) {
        const double f = row[c];
        if (f == 0.0) return;
        for (std::size_t j : nz_) row[j] -= f * prow[j];
        row[c] = 0.0;
        rhs -= f * rhs_[r];
    };
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (i != r) eliminate(a_[i], rhs_[i]);
    eliminate(d_, neg_obj_);
    basis_[r] = c;
}

void IncrementalSimplex::price(const std::vector<double>& column_cost) {
    d_ = column_cost;
    neg_obj_ = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        const double cb = column_cost[basis_[i]];
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j < d_.size(); ++j) d_[j] -= cb * a_[i][j];
        neg_obj_ -= cb * rhs_[i];
    }
}

std::vector<double> IncrementalSimplex::phase_two_cost() const {
    std::vector<double> c(d_.size(), 0.0);
    for (std::size_t j = 0; j < lp_.num_vars; ++j) c[var_col_[j]] = lp_.cost[j];
    return c;
}

LpStatus IncrementalSimplex::primal(bool allow_artificial, std::size_t& pivots) {
    std::size_t degenerate = 0;
    double last_obj = std::numeric_limits<double>::infinity();
    for (;;) {
        if (pivots >= opt_.max_pivots) return LpStatus::IterationLimit;
        const bool bland = degenerate >= opt_.degenerate_limit;
        std::size_t enter = kNone;
        double best = -opt_.pivot_tol;
        for (std::size_t j = 0; j < d_.size(); ++j) {
            if (!allow_artificial && kind_[j] == Kind::Artificial) continue;
            if (d_[j] < best) {
                enter = j;
                best = d_[j];
                if (bland) break;
            }
        }
        if (enter == kNone) return LpStatus::Optimal;

        std::size_t leave = kNone;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < a_.size(); ++i) {
            const double v = a_[i][enter];
            if (v <= opt_.pivot_tol) continue;
            const double ratio = std::max(0.0, rhs_[i]) / v;
            if (ratio < best_ratio - 1e-12 ||
                (ratio <= best_ratio + 1e-12 && leave != kNone && basis_[i] < basis_[leave])) {
                best_ratio = std::min(best_ratio, ratio);
                leave = i;
            }
        }
        if (leave == kNone) return LpStatus::Unbounded;
        pivot(leave, enter);
        ++pivots;
        if (-neg_obj_ < last_obj - 1e-12) {
            degenerate = 0;
            last_obj = -neg_obj_;
        } else {
            ++degenerate;
        }
    }
}

// Restores primal feasibility while keeping reduced costs nonnegative. After
// a run of pivots without objective progress the choices fall back to
// smallest-index rules, which cannot cycle.
LpStatus IncrementalSimplex::dual(std::size_t& pivots) {
    std::size_t degenerate = 0;
    double last_obj = -std::numeric_limits<double>::infinity();
    for (;;) {
        if (pivots >= opt_.max_pivots) return LpStatus::IterationLimit;
        const bool bland = degenerate >= opt_.degenerate_limit;
        std::size_t leave = kNone;
        double worst = 0.0;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (rhs_[i] >= -opt_.feasibility_tol) continue;
            if (bland) {
                if (leave == kNone || basis_[i] < basis_[leave]) leave = i;
                continue;
            }
            // Dual steepest edge: infeasibility scaled by the norm of the
            // row of the basis inverse.
            double norm = 0.0;
            for (std::size_t c : identity_col_) norm += a_[i][c] * a_[i][c];
            const double score = rhs_[i] * rhs_[i] / std::max(norm, 1e-12);
            if (score > worst) {
                worst = score;
                leave = i;
            }
        }
        if (leave == kNone) return LpStatus::Optimal;

        std::size_t enter = kNone;
        double best_ratio = std::numeric_limits<double>::infinity();
        const auto& row = a_[leave];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (kind_[j] == Kind::Artificial || row[j] >= -opt_.pivot_tol) continue;
            const double ratio = std::max(0.0, d_[j]) / -row[j];
            if (ratio < best_ratio - 1e-12) {
                best_ratio = ratio;
                enter = j;
            }
        }
        if (enter == kNone) return LpStatus::Infeasible;
        pivot(leave, enter);
        ++pivots;
        if (-neg_obj_ > last_obj + 1e-12) {
            degenerate = 0;
            last_obj = -neg_obj_;
        } else {
            ++degenerate;
        }
    }
}

std::size_t IncrementalSimplex::add_variable(double cost) {
    const std::size_t j = lp_.num_vars++;
    lp_.cost.push_back(cost);
    if (built_) {
        var_col_.push_back(d_.size());
        add_column(Kind::Structural, j);
        d_.back() = cost;  // a zero column prices at its own cost
    }
    return j;
}

void IncrementalSimplex::add_constraint(LinearConstraint row) {
    if (row.sense == Sense::Equal) throw std::invalid_argument("add_constraint: equality rows are not supported");
    for (const auto& [j, v] : row.terms)
        if (j >= lp_.num_vars) throw std::invalid_argument("add_constraint: variable index out of range");
    lp_.constraints.push_back(row);
    if (!built_) return;

    const std::size_t i = a_.size();
    const double s = row.sense == Sense::LessEqual ? 1.0 : -1.0;
    add_column(Kind::Slack, kNone);
    std::vector<double> fresh(d_.size(), 0.0);
    for (const auto& [j, v] : row.terms) fresh[var_col_[j]] += s * v;
    fresh.back() = 1.0;
    double rhs = perturbed(i, s * row.rhs);
    // Express the row in the current nonbasic variables.
    for (std::size_t r = 0; r < a_.size(); ++r) {
        const double f = fresh[basis_[r]];
        if (f == 0.0) continue;
        const auto& src = a_[r];
        for (std::size_t j = 0; j < src.size(); ++j)
            if (src[j] != 0.0) fresh[j] -= f * src[j];
        fresh[basis_[r]] = 0.0;
        rhs -= f * rhs_[r];
    }
    a_.push_back(std::move(fresh));
    rhs_.push_back(rhs);
    basis_.push_back(d_.size() - 1);
    identity_col_.push_back(d_.size() - 1);
    sign_.push_back(s);
}

LpSolution IncrementalSimplex::solve() {
    std::size_t pivots = 0;
    if (built_ && optimal_) {
        // The cost row is highly degenerate (only a few variables carry
        // cost), so the dual phase runs on loosened reduced costs and the
        // exact ones are restored for the primal cleanup.
        if (opt_.perturbation > 0.0) {
            std::vector<bool> basic(d_.size(), false);
            for (std::size_t c : basis_) basic[c] = true;
            for (std::size_t j = 0; j < d_.size(); ++j)
                if (!basic[j] && kind_[j] != Kind::Artificial)
                    d_[j] = std::max(d_[j], 0.0) + perturbed(j, 0.0);
        }
        auto st = dual(pivots);
        if (opt_.perturbation > 0.0) price(phase_two_cost());
        if (st == LpStatus::Optimal) st = primal(false, pivots);
        if (st != LpStatus::Optimal) {
            LpSolution sol;
            sol.status = st;
            sol.pivots = pivots;
            optimal_ = false;
            return sol;
        }
        return extract(pivots);
    }

    build();
    std::vector<double> phase_one(d_.size(), 0.0);
    bool has_art = false;
    for (std::size_t j = 0; j < d_.size(); ++j)
        if (kind_[j] == Kind::Artificial) phase_one[j] = 1.0, has_art = true;
    if (has_art) {
        price(phase_one);
        const auto st = primal(true, pivots);
        if (st == LpStatus::IterationLimit) {
            LpSolution sol;
            sol.pivots = pivots;
            return sol;
        }
        if (neg_obj_ < -opt_.feasibility_tol * std::max<double>(1.0, static_cast<double>(a_.size()))) {
            LpSolution sol;
            sol.status = LpStatus::Infeasible;
            sol.pivots = pivots;
            return sol;
        }
        // Drive zero-level artificials out of the basis. Rows with no usable
        // pivot are redundant; they stay inert with the artificial at zero.
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (kind_[basis_[i]] != Kind::Artificial) continue;
            for (std::size_t j = 0; j < d_.size(); ++j)
                if (kind_[j] != Kind::Artificial && std::abs(a_[i][j]) > opt_.pivot_tol) {
                    pivot(i, j);
                    ++pivots;
                    break;
                }
        }
    }
    price(phase_two_cost());
    const auto st = primal(false, pivots);
    if (st != LpStatus::Optimal) {
        LpSolution sol;
        sol.status = st;
        sol.pivots = pivots;
        return sol;
    }
    return extract(pivots);
}

LpSolution IncrementalSimplex::extract(std::size_t pivots) {
    const std::size_t m = a_.size();
    // Re-solve the final basis against the unperturbed right-hand side. It
    // stays primal feasible unless the perturbation was too coarse, in which
    // case the whole program is solved again without it.
    std::vector<double> xb(rhs_);
    if (opt_.perturbation > 0.0) {
        double worst = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double v = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double bk = sign_[k] * lp_.constraints[k].rhs;
                if (bk != 0.0) v += a_[i][identity_col_[k]] * bk;
            }
            xb[i] = v;
            worst = std::min(worst, v);
        }
        if (worst < -opt_.feasibility_tol) {
            opt_.perturbation = 0.0;
            built_ = false;
            auto retry = solve();
            retry.pivots += pivots;
            return retry;
        }
    }

    optimal_ = true;
    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.pivots = pivots;
    sol.x.assign(lp_.num_vars, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (kind_[basis_[i]] == Kind::Structural) sol.x[col_var_[basis_[i]]] = std::max(0.0, xb[i]);
    for (std::size_t j = 0; j < lp_.num_vars; ++j) sol.objective += lp_.cost[j] * sol.x[j];
    sol.duals.resize(m);
    for (std::size_t i = 0; i < m; ++i) sol.duals[i] = -d_[identity_col_[i]] * sign_[i];
    return sol;
}

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
    return IncrementalSimplex(lp, options).solve();
}

double dual_bound(const LinearProgram& lp, std::span<const double> duals, std::span<const double> upper) {
    if (duals.size() != lp.constraints.size() || upper.size() != lp.num_vars)
        throw std::invalid_argument("dual_bound: size mismatch");
    std::vector<double> aty(lp.num_vars, 0.0);
    double bound = 0.0;
    for (std::size_t i = 0; i < duals.size(); ++i) {
        const auto& c = lp.constraints[i];
        double y = duals[i];
        if (c.sense == Sense::LessEqual) y = std::min(y, 0.0);
        if (c.sense == Sense::GreaterEqual) y = std::max(y, 0.0);
        if (y == 0.0) continue;
        bound += c.rhs * y;
        for (auto [j, a] : c.terms) aty[j] += a * y;
    }
    for (std::size_t j = 0; j < lp.num_vars; ++j) bound -= std::max(0.0, aty[j] - lp.cost[j]) * upper[j];
    return bound;
}

}  // namespace xpa
