#include "mwg/subspace.hpp"

#include <utility>

namespace mwg {

namespace {

int rank_by_singular_values(const Eigen::VectorXd& sigma, const TolerancePolicy& tol) {
    if (sigma.size() == 0) return 0;
    const double cutoff = tol.eigenvalue_cutoff(sigma(0));  // descending in Eigen
    int rank = 0;
    for (Eigen::Index k = 0; k < sigma.size(); ++k) {
        if (sigma(k) > cutoff) ++rank;
    }
    return rank;
}

}  // namespace

Subspace Subspace::from_columns(const Eigen::MatrixXd& columns, const TolerancePolicy& tol) {
    const int d = static_cast<int>(columns.rows());
    if (columns.cols() == 0) return trivial(d);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns, Eigen::ComputeThinU);
    const int rank = rank_by_singular_values(svd.singularValues(), tol);
    return Subspace(svd.matrixU().leftCols(rank));
}

Subspace Subspace::from_orthonormal(Eigen::MatrixXd basis) {
    const Eigen::Index r = basis.cols();
    if (r > 0) {
        const Eigen::MatrixXd gram = basis.transpose() * basis;
        const double drift =
            (gram - Eigen::MatrixXd::Identity(r, r)).cwiseAbs().maxCoeff();
        if (drift > 1e-10) {
            throw Error("basis columns are not orthonormal (drift " + std::to_string(drift) + ")");
        }
    }
    return Subspace(std::move(basis));
}

Subspace Subspace::full(int ambient_dim) {
    return Subspace(Eigen::MatrixXd::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::trivial(int ambient_dim) {
    return Subspace(Eigen::MatrixXd::Zero(ambient_dim, 0));
}

Subspace kernel_of(const PsdMatrix& a) {
    const int zeros = a.dim() - a.rank();
    // Eigenvalues ascending, so the kernel eigenvectors come first.
    return Subspace::from_orthonormal(a.eigenvectors().leftCols(zeros));
}

Subspace sum(const Subspace& u, const Subspace& v, const TolerancePolicy& tol) {
    if (u.ambient() != v.ambient()) {
        throw DimMismatch("subspace sum in R^" + std::to_string(u.ambient()) + " vs R^" +
                          std::to_string(v.ambient()));
    }
    if (u.dim() == 0) return v;
    if (v.dim() == 0) return u;
    Eigen::MatrixXd joined(u.ambient(), u.dim() + v.dim());
    joined.leftCols(u.dim()) = u.basis();
    joined.rightCols(v.dim()) = v.basis();
    return Subspace::from_columns(joined, tol);
}

Subspace intersect(const Subspace& u, const Subspace& v, const TolerancePolicy& tol) {
    if (u.ambient() != v.ambient()) {
        throw DimMismatch("subspace intersection in R^" + std::to_string(u.ambient()) +
                          " vs R^" + std::to_string(v.ambient()));
    }
    const int d = u.ambient();
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);
    Eigen::MatrixXd stacked(2 * d, d);
    stacked.topRows(d) = eye - u.projector();
    stacked.bottomRows(d) = eye - v.projector();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
    const int rank = rank_by_singular_values(svd.singularValues(), tol);
    // Right singular vectors past the rank span the common null space.
    return Subspace::from_orthonormal(svd.matrixV().rightCols(d - rank));
}

bool contains(const Subspace& outer, const Subspace& inner, double tol) {
    if (outer.ambient() != inner.ambient()) {
        throw DimMismatch("containment check in R^" + std::to_string(outer.ambient()) +
                          " vs R^" + std::to_string(inner.ambient()));
    }
    for (int k = 0; k < inner.dim(); ++k) {
        const Eigen::VectorXd vec = inner.basis().col(k);
        const Eigen::VectorXd residual = vec - outer.basis() * (outer.basis().transpose() * vec);
        if (residual.norm() > tol) return false;
    }
    return true;
}

bool same_subspace(const Subspace& u, const Subspace& v, double tol) {
    return u.dim() == v.dim() && contains(u, v, tol) && contains(v, u, tol);
}

}  // namespace mwg
