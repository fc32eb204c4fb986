#pragma once

#include <Eigen/Dense>

#include "mwg/psd.hpp"
#include "mwg/tolerance.hpp"

namespace mwg {

// Linear subspace of R^d held as a d x r matrix with orthonormal columns.
// r = 0 is the trivial subspace {0}, r = d is the full space.
class Subspace {
public:
    // Orthonormalizes arbitrary spanning columns (rank decided by the policy).
    static Subspace from_columns(const Eigen::MatrixXd& columns,
                                 const TolerancePolicy& tol = TolerancePolicy::defaults());
    // Adopts columns that are already orthonormal; rejects anything else.
    static Subspace from_orthonormal(Eigen::MatrixXd basis);
    static Subspace full(int ambient_dim);
    static Subspace trivial(int ambient_dim);

    int ambient() const { return static_cast<int>(basis_.rows()); }
    int dim() const { return static_cast<int>(basis_.cols()); }
    const Eigen::MatrixXd& basis() const { return basis_; }
    Eigen::MatrixXd projector() const { return basis_ * basis_.transpose(); }

private:
    explicit Subspace(Eigen::MatrixXd basis) : basis_(std::move(basis)) {}
    Eigen::MatrixXd basis_;
};

// Eigenspace of the zero eigenvalues.
Subspace kernel_of(const PsdMatrix& a);

// span(U u V), by orthogonalization of the concatenated bases.
Subspace sum(const Subspace& u, const Subspace& v,
             const TolerancePolicy& tol = TolerancePolicy::defaults());

// U n V, via the null space of the stacked orthogonal-complement projectors.
Subspace intersect(const Subspace& u, const Subspace& v,
                   const TolerancePolicy& tol = TolerancePolicy::defaults());

// Every basis vector of inner has residual <= tol after projection onto outer.
bool contains(const Subspace& outer, const Subspace& inner, double tol = 1e-9);

// Equal dimension plus mutual containment.
bool same_subspace(const Subspace& u, const Subspace& v, double tol = 1e-8);

}  // namespace mwg
