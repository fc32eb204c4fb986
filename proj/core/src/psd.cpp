#include "mwg/psd.hpp"

#include <cstdio>
#include <utility>

namespace mwg {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

const char* to_string(DecisionTag tag) {
    switch (tag) {
        case DecisionTag::Identity: return "Identity";
        case DecisionTag::Zero: return "Zero";
        case DecisionTag::General: return "General";
    }
    return "?";
}

PsdMatrix::PsdMatrix(Eigen::MatrixXd entries, Eigen::VectorXd eigenvalues,
                     Eigen::MatrixXd eigenvectors, int rank, TolerancePolicy tol)
    : entries_(std::move(entries)),
      eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)),
      rank_(rank),
      tol_(tol) {}

PsdMatrix PsdMatrix::make(const Eigen::MatrixXd& raw, const TolerancePolicy& tol,
                          double negative_slack) {
    if (raw.rows() == 0 || raw.rows() != raw.cols()) {
        throw NotSquare("matrix must be square and nonempty, got " +
                        std::to_string(raw.rows()) + "x" + std::to_string(raw.cols()));
    }
    if (!raw.allFinite()) {
        throw NonFinite("matrix has non-finite entries");
    }
    Eigen::MatrixXd symmetrized = 0.5 * (raw + raw.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetrized);
    if (solver.info() != Eigen::Success) {
        throw Error("eigendecomposition did not converge");
    }
    Eigen::VectorXd values = solver.eigenvalues();  // ascending
    const int d = static_cast<int>(values.size());
    const double cutoff = tol.eigenvalue_cutoff(std::max(values(d - 1), 0.0));
    // Negatives inside the clamp band (or the caller's slack) are noise and
    // get zeroed below; anything further down is a genuine violation.
    if (values(0) < -std::max(cutoff, negative_slack)) {
        throw NotPsd("matrix is not positive semidefinite (min eigenvalue " + fmt(values(0)) +
                     ")");
    }
    int rank = 0;
    for (int k = 0; k < d; ++k) {
        if (values(k) <= cutoff) {
            values(k) = 0.0;
        } else {
            ++rank;
        }
    }
    // Rebuild from the clamped spectrum so the cache matches the entries
    // exactly instead of to within a reconstruction tolerance.
    Eigen::MatrixXd entries =
        solver.eigenvectors() * values.asDiagonal() * solver.eigenvectors().transpose();
    entries = 0.5 * (entries + entries.transpose()).eval();
    return PsdMatrix(std::move(entries), std::move(values), solver.eigenvectors(), rank, tol);
}

PsdMatrix PsdMatrix::identity(int d, const TolerancePolicy& tol) {
    return PsdMatrix(Eigen::MatrixXd::Identity(d, d), Eigen::VectorXd::Ones(d),
                     Eigen::MatrixXd::Identity(d, d), d, tol);
}

PsdMatrix PsdMatrix::zero(int d, const TolerancePolicy& tol) {
    return PsdMatrix(Eigen::MatrixXd::Zero(d, d), Eigen::VectorXd::Zero(d),
                     Eigen::MatrixXd::Identity(d, d), 0, tol);
}

PsdMatrix PsdMatrix::pinv() const {
    const int d = dim();
    const int zeros = d - rank_;
    Eigen::VectorXd values(d);
    Eigen::MatrixXd vectors(d, d);
    values.head(zeros).setZero();
    vectors.leftCols(zeros) = eigenvectors_.leftCols(zeros);
    // Inverting the positive eigenvalues reverses their order; reorder the
    // columns so the spectrum stays ascending.
    for (int k = 0; k < rank_; ++k) {
        values(zeros + k) = 1.0 / eigenvalues_(d - 1 - k);
        vectors.col(zeros + k) = eigenvectors_.col(d - 1 - k);
    }
    Eigen::MatrixXd entries = vectors * values.asDiagonal() * vectors.transpose();
    entries = 0.5 * (entries + entries.transpose()).eval();
    return PsdMatrix(std::move(entries), std::move(values), std::move(vectors), rank_, tol_);
}

PsdMatrix series_sum(const PsdMatrix& a, const PsdMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimMismatch("series sum of " + std::to_string(a.dim()) + "x" +
                          std::to_string(a.dim()) + " and " + std::to_string(b.dim()) + "x" +
                          std::to_string(b.dim()));
    }
    return PsdMatrix::make(a.entries() + b.entries(), a.tol());
}

PsdMatrix parallel_sum(const PsdMatrix& a, const PsdMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimMismatch("parallel sum of " + std::to_string(a.dim()) + "x" +
                          std::to_string(a.dim()) + " and " + std::to_string(b.dim()) + "x" +
                          std::to_string(b.dim()));
    }
    const PsdMatrix total = series_sum(a, b);
    const PsdMatrix inverse = total.pinv();
    Eigen::MatrixXd product = a.entries() * inverse.entries() * b.entries();
    // PSD operands give a PSD product in exact arithmetic; the two matrix
    // multiplications leave noise eigenvalues up to about
    // ||A|| ||(A+B)^+|| ||B|| eps, so the PSD gate gets that much slack.
    const int d = a.dim();
    const double amplification =
        a.eigenvalues()(d - 1) * inverse.eigenvalues()(d - 1) * b.eigenvalues()(d - 1);
    const double slack = a.tol().rel_zero * std::max(1.0, amplification);
    return PsdMatrix::make(product, a.tol(), slack);
}

Decided decision(const PsdMatrix& a) {
    if (a.rank() == a.dim()) {
        return {PsdMatrix::identity(a.dim(), a.tol()), DecisionTag::Identity};
    }
    if (a.is_zero()) {
        return {PsdMatrix::zero(a.dim(), a.tol()), DecisionTag::Zero};
    }
    return {a, DecisionTag::General};
}

}  // namespace mwg
