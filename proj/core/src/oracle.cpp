#include "mwg/oracle.hpp"

namespace mwg {

KernelReport oracle_kernel(const MwGraph& g) {
    const GraphMatrices matrices = laplacian(g);
    return KernelReport{kernel_of(matrices.laplacian), matrices.laplacian.rank(), g.n(), g.d()};
}

bool oracle_same_cluster(const KernelReport& report, int i, int j, const TolerancePolicy& tol) {
    if (i < 1 || i > report.n || j < 1 || j > report.n || i == j) {
        throw BadVertexId("pair (" + std::to_string(i) + "," + std::to_string(j) +
                          ") invalid for n=" + std::to_string(report.n));
    }
    const int d = report.d;
    const Eigen::MatrixXd& basis = report.basis.basis();
    for (int c = 0; c < report.basis.dim(); ++c) {
        const Eigen::VectorXd x = basis.col(c);
        const double gap = (x.segment((i - 1) * d, d) - x.segment((j - 1) * d, d)).norm();
        if (gap > tol.block_equal * (1.0 + x.norm())) return false;
    }
    return true;
}

Partition oracle_partition(const MwGraph& g) {
    const KernelReport report = oracle_kernel(g);
    return partition_from_relation(
        g.n(), [&](int i, int j) { return oracle_same_cluster(report, i, j, g.tol()); },
        Provenance::Oracle);
}

}  // namespace mwg
