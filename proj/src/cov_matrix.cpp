#include "fbmx/cov_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "fbmx/error.hpp"

namespace fbmx {

CovMatrix::CovMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw Error("covariance matrix must be square");
    for (Eigen::Index i = 0; i < entries_.rows(); ++i)
        for (Eigen::Index j = 0; j < i; ++j)
            if (entries_(i, j) != entries_(j, i))
                throw Error("covariance matrix must be symmetric");
}

CovMatrix CovMatrix::identity(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    return CovMatrix(Eigen::MatrixXd::Identity(d, d));
}

double CovMatrix::max_diagonal() const {
    if (entries_.size() == 0) return 0.0;
    return entries_.diagonal().maxCoeff();
}

const Eigen::MatrixXd& CovMatrix::factor() const {
    if (!factor_) throw MissingFactor();
    return *factor_;
}

double CovMatrix::reconstruction_error() const {
    const auto& l = factor();
    if (entries_.size() == 0) return 0.0;
    return (l * l.transpose() - entries_).cwiseAbs().maxCoeff();
}

CovMatrix cholesky_factorize(const CovMatrix& m, double jitter) {
    const Eigen::Index n = m.entries().rows();
    Eigen::MatrixXd a = m.entries();
    if (jitter != 0.0) a.diagonal().array() += jitter;

    const double scale = n > 0 ? std::max(a.diagonal().maxCoeff(), 0.0) : 0.0;
    const double tol = kCholeskyPivotTolerance * scale;

    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double pivot = a(j, j) - l.row(j).head(j).squaredNorm();
        if (pivot < -tol || (scale == 0.0 && pivot < 0.0))
            throw NotPositiveDefinite(static_cast<std::size_t>(j), pivot);
        if (pivot <= tol) {
            // PSD boundary: the column carries no new variance.
            continue;
        }
        const double d = std::sqrt(pivot);
        l(j, j) = d;
        for (Eigen::Index i = j + 1; i < n; ++i)
            l(i, j) = (a(i, j) - l.row(i).head(j).dot(l.row(j).head(j))) / d;
    }

    CovMatrix out = m;
    out.factor_ = std::move(l);
    return out;
}

void sample_gaussian_vector(const CovMatrix& m, RngStream& rng, std::span<double> out,
                            std::span<double> scratch) {
    const auto& l = m.factor();
    const std::size_t n = m.dim();
    rng.fill_normal(scratch.first(n));
    std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(n), 0.0);
    // column sweep keeps the inner loop contiguous in the column-major factor
    for (std::size_t k = 0; k < n; ++k) {
        const double z = scratch[k];
        const double* col = l.data() + k * n;
        for (std::size_t i = k; i < n; ++i) out[i] += col[i] * z;
    }
}

std::vector<double> sample_gaussian_vector(const CovMatrix& m, RngStream& rng) {
    if (!m.has_factor()) throw MissingFactor();
    std::vector<double> out(m.dim()), scratch(m.dim());
    sample_gaussian_vector(m, rng, out, scratch);
    return out;
}

}  // namespace fbmx
