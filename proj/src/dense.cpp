#include "xpa/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace xpa {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> d) {
    DenseMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::vector<double> DenseMatrix::apply(std::span<const double> x) const {
    if (x.size() != cols_) throw std::invalid_argument("DenseMatrix::apply: size mismatch");
    std::vector<double> y(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto rw = row(r);
        y[r] = std::inner_product(rw.begin(), rw.end(), x.begin(), 0.0);
    }
    return y;
}

std::vector<double> DenseMatrix::column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("DenseMatrix product: shape mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("DenseMatrix difference: shape mismatch");
    DenseMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - other.data_[i]));
    return m;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

bool DenseMatrix::is_symmetric(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

SymmetricEigen jacobi_eigen(const DenseMatrix& input, double tol, std::size_t max_sweeps) {
    const std::size_t n = input.rows();
    if (n != input.cols()) throw std::invalid_argument("jacobi_eigen: matrix not square");
    DenseMatrix a = input;
    DenseMatrix v = DenseMatrix::identity(n);
    const double threshold = tol * std::max(1.0, input.frobenius_norm());

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    std::size_t sweep = 0;
    for (; off_norm() > threshold; ++sweep) {
        if (sweep == max_sweeps) throw NotConverged("jacobi_eigen: sweep budget exhausted");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) < a(j, j); });
    SymmetricEigen out;
    out.sweeps = sweep;
    out.values.reserve(n);
    out.vectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values.push_back(a(order[j], order[j]));
        for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
    }
    return out;
}

double operator_norm(const DenseMatrix& a, double tol, std::size_t max_iter) {
    const std::size_t n = a.cols();
    if (n == 0 || a.rows() == 0 || a.frobenius_norm() == 0.0) return 0.0;
    const DenseMatrix at = a.transpose();

    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> unit(0.5, 1.5);
    std::vector<double> x(n);
    for (double& xi : x) xi = unit(rng);

    auto normalize = [](std::vector<double>& v) {
        double s = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        if (s > 0.0)
            for (double& vi : v) vi /= s;
        return s;
    };
    normalize(x);

    double mu = 0.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        auto ax = a.apply(x);
        const double next = std::inner_product(ax.begin(), ax.end(), ax.begin(), 0.0);
        auto y = at.apply(ax);
        if (normalize(y) == 0.0) {
            // x landed in the kernel; restart from a fresh direction
            for (double& xi : x) xi = unit(rng);
            normalize(x);
            continue;
        }
        x = std::move(y);
        if (it > 0 && std::abs(next - mu) <= tol * 1e-3 * next) return std::sqrt(next);
        mu = next;
    }
    throw NotConverged("operator_norm: power iteration budget exhausted");
}

}  // namespace xpa
