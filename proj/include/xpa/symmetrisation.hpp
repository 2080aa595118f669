#ifndef XPA_SYMMETRISATION_HPP
#define XPA_SYMMETRISATION_HPP

#include <cstddef>

#include "xpa/dense.hpp"
#include "xpa/graph.hpp"
#include "xpa/kernel.hpp"

namespace xpa {

/// alpha(eta)(x) = sqrt|eta(x)|, so ||alpha(eta)||_2^2 = ||eta||_1.
SparseRow alpha(const SparseRow& row);
/// beta(xi)(x) = |xi(x)|^2, so ||beta(xi)||_1 = ||xi||_2^2.
SparseRow beta(const SparseRow& row);

L2Kernel alpha(const Kernel& phi, const Metric& metric);

/// Rescales every row to unit l2 norm. Throws std::domain_error when a row
/// norm is below 1 - tol.
L2Kernel normalize(const L2Kernel& xi, const Metric& metric, double tol = 0.1);

/// Finite matrix standing in for an operator on l2(X); propagation is the
/// largest d(x,y) over nonzero entries M(y,x).
class PropagationOperator {
public:
    PropagationOperator() = default;
    PropagationOperator(DenseMatrix m, const Metric& metric);

    const DenseMatrix& matrix() const { return m_; }
    std::size_t propagation() const { return propagation_; }
    bool is_self_adjoint(double tol = 1e-10) const { return m_.is_symmetric(tol); }
    /// Smallest eigenvalue >= -tol (symmetric matrices only).
    bool is_positive_semidefinite(double tol = 1e-10) const;

private:
    DenseMatrix m_;
    std::size_t propagation_ = 0;
};

/// (T xi)(y) = sum_x theta(x)(y) xi(x), i.e. M(y,x) = theta(x)(y).
PropagationOperator kernel_operator(const L2Kernel& theta, const Metric& metric);

/// (T^T T)^{1/2} from a Jacobi eigendecomposition, negative round-off
/// eigenvalues clamped to zero. The result is exactly symmetric.
PropagationOperator positive_sqrt(const PropagationOperator& t, const Metric& metric);

struct Truncation {
    PropagationOperator op;
    double error = 0.0;  ///< ||op - input||_2
};

/// Zeroes entries with d(x,y) > s_cut and symmetrizes as (M + M^T)/2.
Truncation truncate(const PropagationOperator& tp, const Metric& metric, std::size_t s_cut);

struct SymmetrisationReport {
    std::size_t radius = 1;            ///< R used for the variations
    double symmetry_defect = 0.0;      ///< max |psi(x)(z) - psi(z)(x)|
    double unital_defect = 0.0;        ///< max | ||psi(x)||_2 - 1 |
    double truncation_error = 0.0;
    std::size_t propagation = 0;       ///< support radius of psi
    double variation_before = 0.0;     ///< V_2(theta, R)
    double variation_after = 0.0;      ///< V_2(psi, R)
    double rowsum_slack = 0.0;         ///< max | ||theta(x)|| - 1 | + isometry defect
    double sqrt_residual = 0.0;        ///< max-entry ||T'^2 - T^T T||
    double isometry_defect = 0.0;      ///< max_x | ||T d_x|| - ||T' d_x|| |
    bool bound_check = false;
};

struct Symmetrised {
    L2Kernel theta;
    PropagationOperator t, t_root, t_cut;
    L2Kernel psi;
    SymmetrisationReport report;
};

struct SymmetriseOptions {
    std::size_t radius = 1;
    double rowsum_tol = 0.1;
    double slack = 1e-9;  ///< numerical allowance in bound_check
};

/// phi -> alpha -> unit rows theta -> T -> T' = (T^T T)^{1/2} -> banded T''
/// -> psi(x) = T'' delta_x. Throws std::invalid_argument when
/// rowsum_dev(phi) exceeds options.rowsum_tol.
Symmetrised symmetrise(const Kernel& phi, const Metric& metric, std::size_t s_cut,
                       const SymmetriseOptions& options = {});

/// phi(x)(z) = psi(x)(z)^2. Throws std::invalid_argument on an asymmetric
/// psi (defect above 1e-10).
Kernel to_l1_symmetric(const L2Kernel& psi, const Metric& metric);

}  // namespace xpa

#endif
