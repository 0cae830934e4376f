#include "qss/qlogic.hpp"

#include <Eigen/SVD>

namespace qss {

namespace {

constexpr double kRankTol = 1e-10;
constexpr double kMeetTol = 1e-9;

}  // namespace

Subspace::Subspace(Mat basis) : basis_(std::move(basis)) {
    if (basis_.rows() < basis_.cols()) throw UsageError("subspace dimension exceeds ambient space");
    if (basis_.cols() > 0) {
        const Mat gram = basis_.transpose() * basis_;
        const double err = (gram - Mat::Identity(basis_.cols(), basis_.cols())).cwiseAbs().maxCoeff();
        if (err > kRankTol) throw UsageError("subspace basis is not orthonormal");
    }
}

bool Subspace::contains(const Vec& v, double tol) const {
    if (v.size() != basis_.rows()) throw UsageError("vector dimension mismatch");
    const double norm = v.norm();
    if (norm == 0.0) return true;
    const Vec u = v / norm;
    return (u - basis_ * (basis_.transpose() * u)).norm() <= tol;
}

Subspace span(const std::vector<Vec>& vectors) {
    Eigen::Index n = -1;
    for (const auto& v : vectors) {
        if (n < 0)
            n = v.size();
        else if (v.size() != n)
            throw UsageError("span input dimension mismatch");
    }
    if (n <= 0) throw DegenerateError("span requires at least one nonzero vector");

    Mat basis(n, static_cast<Eigen::Index>(vectors.size()));
    Eigen::Index k = 0;
    bool any_nonzero = false;
    for (const auto& v : vectors) {
        const double norm = v.norm();
        if (norm == 0.0) continue;
        any_nonzero = true;
        Vec u = v / norm;
        u -= basis.leftCols(k) * (basis.leftCols(k).transpose() * u);
        if (u.norm() < kRankTol) continue;  // dependent on earlier vectors
        u -= basis.leftCols(k) * (basis.leftCols(k).transpose() * u);
        basis.col(k++) = u / u.norm();
    }
    if (!any_nonzero) throw DegenerateError("span requires at least one nonzero vector");
    return Subspace(Mat(basis.leftCols(k)));
}

Vec project(const Vec& v, const Subspace& s) {
    if (v.size() != static_cast<Eigen::Index>(s.ambient()))
        throw UsageError("vector dimension mismatch");
    return s.basis() * (s.basis().transpose() * v);
}

Vec negate(const Vec& query, const std::vector<Vec>& unwanted) {
    const double qnorm = query.norm();
    if (qnorm == 0.0) throw UsageError("query must be nonzero");
    Vec q = query / qnorm;

    bool any_nonzero = false;
    for (const auto& u : unwanted)
        if (u.norm() > 0.0) any_nonzero = true;
    if (!any_nonzero) return q;  // nothing to remove

    const Subspace s = span(unwanted);
    Vec residual = q - project(q, s);
    if (residual.norm() < kRankTol)
        throw DegenerateError("query lies inside the span of the unwanted terms");
    residual -= project(residual, s);
    return residual / residual.norm();
}

DerivationResult approx_derivable(const Vec& b, const std::vector<Vec>& generators, double tau) {
    if (!(tau > 0.0)) throw UsageError("tau must be > 0");
    if (std::abs(b.norm() - 1.0) > 1e-12) throw UsageError("vector must be unit length");
    const Subspace s = span(generators);
    const double residual = (b - project(b, s)).norm();
    return {residual <= tau, residual};
}

Subspace meet(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw UsageError("ambient dimension mismatch");
    const Eigen::Index n = static_cast<Eigen::Index>(a.ambient());
    if (a.dim() == 0 || b.dim() == 0) return Subspace(Mat(n, 0));

    // v is in both subspaces iff both complement projectors annihilate it
    Mat stacked(2 * n, n);
    stacked.topRows(n) = Mat::Identity(n, n) - a.basis() * a.basis().transpose();
    stacked.bottomRows(n) = Mat::Identity(n, n) - b.basis() * b.basis().transpose();

    Eigen::BDCSVD<Mat> svd(stacked, Eigen::ComputeFullV);
    Eigen::Index kept = 0;
    for (Eigen::Index i = svd.singularValues().size(); i-- > 0;) {
        if (svd.singularValues()[i] <= kMeetTol)
            ++kept;
        else
            break;
    }
    return Subspace(Mat(svd.matrixV().rightCols(kept)));
}

}  // namespace qss
