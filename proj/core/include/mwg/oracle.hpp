#pragma once

#include "mwg/graph.hpp"
#include "mwg/partition.hpp"
#include "mwg/subspace.hpp"

namespace mwg {

// Ground truth: the Laplacian kernel and its rank. dim(basis) + rank = dn,
// and dim(basis) >= d because the constant block vectors always lie in the
// kernel.
struct KernelReport {
    Subspace basis;  // subspace of R^{dn}
    int laplacian_rank;
    int n;
    int d;
};

KernelReport oracle_kernel(const MwGraph& g);

// True iff every kernel basis vector has equal i-th and j-th d-blocks, to
// block_equal relative tolerance. Equality over a basis extends to the span.
bool oracle_same_cluster(const KernelReport& report, int i, int j,
                         const TolerancePolicy& tol = TolerancePolicy::defaults());

// Exact cluster partition; the graph is connected iff it is a single cluster
// (equivalently laplacian_rank == d*(n-1)).
Partition oracle_partition(const MwGraph& g);

}  // namespace mwg
