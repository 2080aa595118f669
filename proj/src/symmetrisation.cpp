#include "xpa/symmetrisation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace xpa {

SparseRow alpha(const SparseRow& row) {
    SparseRow out;
    out.reserve(row.size());
    for (const auto& e : row) out.push_back({e.index, std::sqrt(std::abs(e.value))});
    return out;
}

SparseRow beta(const SparseRow& row) {
    SparseRow out;
    out.reserve(row.size());
    for (const auto& e : row) out.push_back({e.index, e.value * e.value});
    return out;
}

L2Kernel alpha(const Kernel& phi, const Metric& metric) {
    std::vector<SparseRow> rows;
    rows.reserve(phi.size());
    for (const auto& r : phi.rows()) rows.push_back(alpha(r));
    return L2Kernel(std::move(rows), metric);
}

L2Kernel normalize(const L2Kernel& xi, const Metric& metric, double tol) {
    std::vector<SparseRow> rows(xi.rows().begin(), xi.rows().end());
    for (std::size_t x = 0; x < rows.size(); ++x) {
        const double norm = xi.row_norms()[x];
        if (norm < 1.0 - tol)
            throw std::domain_error("normalize: row " + std::to_string(x) + " has norm " +
                                    std::to_string(norm) + " below 1 - tol");
        for (auto& e : rows[x]) e.value /= norm;
    }
    return L2Kernel(std::move(rows), metric);
}

PropagationOperator::PropagationOperator(DenseMatrix m, const Metric& metric) : m_(std::move(m)) {
    if (m_.rows() != metric.size() || m_.cols() != metric.size())
        throw std::invalid_argument("PropagationOperator: shape differs from space size");
    for (std::size_t y = 0; y < m_.rows(); ++y)
        for (std::size_t x = 0; x < m_.cols(); ++x)
            if (m_(y, x) != 0.0) propagation_ = std::max<std::size_t>(propagation_, metric(x, y));
}

bool PropagationOperator::is_positive_semidefinite(double tol) const {
    if (!is_self_adjoint(tol)) return false;
    if (m_.rows() == 0) return true;
    return jacobi_eigen(m_).values.front() >= -tol;
}

PropagationOperator kernel_operator(const L2Kernel& theta, const Metric& metric) {
    DenseMatrix m(theta.size(), theta.size());
    for (Vertex x = 0; x < theta.size(); ++x)
        for (const auto& e : theta.row(x)) m(e.index, x) = e.value;
    return PropagationOperator(std::move(m), metric);
}

PropagationOperator positive_sqrt(const PropagationOperator& t, const Metric& metric) {
    const DenseMatrix& a = t.matrix();
    const DenseMatrix gram = a.transpose() * a;
    const auto eig = jacobi_eigen(gram);
    const std::size_t n = gram.rows();
    // Eigenvalues at round-off level are zero: their square roots would be
    // of order 1e-8 and show up as spurious variation.
    double top = 0.0;
    for (double v : eig.values) top = std::max(top, std::abs(v));
    const double floor = 64.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * top;
    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) roots[i] = eig.values[i] > floor ? std::sqrt(eig.values[i]) : 0.0;

    DenseMatrix root(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += eig.vectors(i, k) * roots[k] * eig.vectors(j, k);
            root(i, j) = s;
            root(j, i) = s;
        }
    return PropagationOperator(std::move(root), metric);
}

Truncation truncate(const PropagationOperator& tp, const Metric& metric, std::size_t s_cut) {
    const DenseMatrix& m = tp.matrix();
    const std::size_t n = m.rows();
    DenseMatrix cut(n, n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            if (metric.within(x, y, s_cut)) cut(y, x) = m(y, x);
    DenseMatrix sym(n, n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) sym(y, x) = 0.5 * (cut(y, x) + cut(x, y));

    Truncation out;
    out.error = operator_norm(sym - m);
    out.op = PropagationOperator(std::move(sym), metric);
    return out;
}

Symmetrised symmetrise(const Kernel& phi, const Metric& metric, std::size_t s_cut,
                       const SymmetriseOptions& options) {
    if (phi.rowsum_dev() > options.rowsum_tol)
        throw std::invalid_argument("symmetrise: row-sum deviation " + std::to_string(phi.rowsum_dev()) +
                                    " exceeds tolerance");
    Symmetrised s;
    s.theta = normalize(alpha(phi, metric), metric, options.rowsum_tol);
    s.t = kernel_operator(s.theta, metric);
    s.t_root = positive_sqrt(s.t, metric);
    auto cut = truncate(s.t_root, metric, s_cut);
    s.t_cut = std::move(cut.op);

    const DenseMatrix& m = s.t_cut.matrix();
    const std::size_t n = m.rows();
    std::vector<SparseRow> rows(n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex z = 0; z < n; ++z)
            if (m(z, x) != 0.0) rows[x].push_back({z, m(z, x)});
    s.psi = L2Kernel(std::move(rows), metric);

    auto& r = s.report;
    r.radius = options.radius;
    r.truncation_error = cut.error;
    r.symmetry_defect = s.psi.symmetry_defect();
    r.propagation = s.psi.support_radius();
    for (double norm : s.psi.row_norms()) r.unital_defect = std::max(r.unital_defect, std::abs(norm - 1.0));

    const DenseMatrix gram = s.t.matrix().transpose() * s.t.matrix();
    r.sqrt_residual = (s.t_root.matrix() * s.t_root.matrix()).max_abs_diff(gram);
    double theta_slack = 0.0;
    for (Vertex x = 0; x < n; ++x) {
        theta_slack = std::max(theta_slack, std::abs(s.theta.row_norms()[x] - 1.0));
        auto col_t = s.t.matrix().column(x);
        auto col_root = s.t_root.matrix().column(x);
        double nt = 0.0, nr = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            nt += col_t[k] * col_t[k];
            nr += col_root[k] * col_root[k];
        }
        r.isometry_defect = std::max(r.isometry_defect, std::abs(std::sqrt(nt) - std::sqrt(nr)));
    }
    r.rowsum_slack = theta_slack + r.isometry_defect;
    r.variation_before = variation(s.theta, metric, options.radius, RowNorm::L2).value;
    r.variation_after = variation(s.psi, metric, options.radius, RowNorm::L2).value;
    r.bound_check = r.symmetry_defect <= 1e-10 &&
                    r.variation_after <= r.variation_before + 2.0 * r.truncation_error + options.slack &&
                    r.unital_defect <= r.truncation_error + r.rowsum_slack + options.slack;
    return s;
}

Kernel to_l1_symmetric(const L2Kernel& psi, const Metric& metric) {
    if (psi.symmetry_defect() > 1e-10)
        throw std::invalid_argument("to_l1_symmetric: input kernel is not symmetric");
    std::vector<SparseRow> rows;
    rows.reserve(psi.size());
    for (const auto& r : psi.rows()) rows.push_back(beta(r));
    return Kernel(std::move(rows), metric);
}

}  // namespace xpa
