#pragma once

#include <Eigen/Dense>

#include "mwg/errors.hpp"
#include "mwg/tolerance.hpp"

namespace mwg {

enum class DecisionTag { Identity, Zero, General };

const char* to_string(DecisionTag tag);

// Symmetric positive-semidefinite matrix. The eigendecomposition is computed
// once at construction and carried with the value; eigenvalues at or below
// the policy cutoff are exactly 0 and the stored entries are rebuilt from the
// clamped spectrum, so entries == V diag(w) V^T holds by construction.
// Immutable; safe to share across threads.
class PsdMatrix {
public:
    // negative_slack widens the PSD rejection gate for callers whose result
    // is PSD in exact arithmetic but carries known rounding amplification;
    // admitted negative eigenvalues are clamped to zero like any other value
    // inside the cutoff band.
    static PsdMatrix make(const Eigen::MatrixXd& raw,
                          const TolerancePolicy& tol = TolerancePolicy::defaults(),
                          double negative_slack = 0.0);
    static PsdMatrix identity(int d, const TolerancePolicy& tol = TolerancePolicy::defaults());
    static PsdMatrix zero(int d, const TolerancePolicy& tol = TolerancePolicy::defaults());

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXd& entries() const { return entries_; }
    // Ascending; zeros are exact.
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    // Orthonormal columns, ordered like eigenvalues().
    const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }
    const TolerancePolicy& tol() const { return tol_; }

    // Count of nonzero (post-clamp) eigenvalues.
    int rank() const { return rank_; }
    double max_abs() const { return entries_.cwiseAbs().maxCoeff(); }
    // Zero to tolerance: max-abs entry <= abs_zero * dim.
    bool is_zero() const { return max_abs() <= tol_.abs_zero * dim(); }

    // Moore-Penrose pseudoinverse via spectral inversion of the nonzero
    // eigenvalues. No re-thresholding: the known spectrum is reused so that
    // pinv(pinv(A)) recovers A even when A is badly conditioned.
    PsdMatrix pinv() const;

private:
    PsdMatrix(Eigen::MatrixXd entries, Eigen::VectorXd eigenvalues,
              Eigen::MatrixXd eigenvectors, int rank, TolerancePolicy tol);

    Eigen::MatrixXd entries_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
    int rank_;
    TolerancePolicy tol_;
};

// A + B. Kernel of the result is the intersection of the operand kernels.
PsdMatrix series_sum(const PsdMatrix& a, const PsdMatrix& b);

// A (A+B)^+ B, symmetrized and eigenvalue-clamped on output. Kernel of the
// result is the subspace sum of the operand kernels.
PsdMatrix parallel_sum(const PsdMatrix& a, const PsdMatrix& b);

struct Decided {
    PsdMatrix value;
    DecisionTag tag;
};

// Snap to I_d when full rank, to the zero matrix when zero to tolerance,
// otherwise pass through unchanged. Kernel-preserving in all three cases.
Decided decision(const PsdMatrix& a);

}  // namespace mwg
