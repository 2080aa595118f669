#ifndef XPA_DENSE_HPP
#define XPA_DENSE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "xpa/errors.hpp"

namespace xpa {

/// Row-major dense real matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(std::span<const double> d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    DenseMatrix transpose() const;
    std::vector<double> apply(std::span<const double> x) const;
    std::vector<double> column(std::size_t c) const;

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

    /// max |a_ij - b_ij|
    double max_abs_diff(const DenseMatrix& other) const;
    double frobenius_norm() const;
    bool is_symmetric(double tol = 0.0) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

struct SymmetricEigen {
    std::vector<double> values;  ///< ascending
    DenseMatrix vectors;         ///< column j pairs with values[j]
    std::size_t sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
/// tol * max(1, ||A||_F). Throws NotConverged after max_sweeps.
SymmetricEigen jacobi_eigen(const DenseMatrix& a, double tol = 1e-12, std::size_t max_sweeps = 100);

/// Largest singular value by power iteration on A^T A, stopping when the
/// relative change of the estimate falls below tol.
double operator_norm(const DenseMatrix& a, double tol = 1e-9, std::size_t max_iter = 100000);

}  // namespace xpa

#endif
