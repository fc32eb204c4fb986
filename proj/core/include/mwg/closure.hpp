#pragma once

#include <vector>

#include "mwg/graph.hpp"
#include "mwg/partition.hpp"
#include "mwg/psd.hpp"

namespace mwg {

// Symmetric n x n grid of d x d PSD blocks, each carrying the tag its value
// would receive from the decision operator. Writes go through set(), which
// mirrors (j,i), so the grid stays exactly symmetric.
class BlockMatrix {
public:
    BlockMatrix(int n, int d, const PsdMatrix& fill, DecisionTag fill_tag);
    // I_d / Identity on the diagonal, zero / Zero off it.
    static BlockMatrix identity(int n, int d,
                                const TolerancePolicy& tol = TolerancePolicy::defaults());

    int block_count() const { return n_; }
    int block_dim() const { return d_; }
    const PsdMatrix& block(int i, int j) const;  // 1-based
    DecisionTag tag(int i, int j) const;
    void set(int i, int j, const PsdMatrix& value, DecisionTag tag);

    bool all_identity() const;
    bool tags_equal(const BlockMatrix& other) const;

private:
    std::size_t index(int i, int j) const;
    int n_;
    int d_;
    std::vector<PsdMatrix> blocks_;
    std::vector<DecisionTag> tags_;
};

// Raw edge weights off the diagonal, zero blocks elsewhere. Values are not
// snapped; tags record what the decision operator would assign.
BlockMatrix block_adjacency(const MwGraph& g);

// C_ij = series sum over k ascending of parallel_sum(a(i,k), b(k,j)).
// Only i <= j is evaluated; (j,i) is mirrored.
BlockMatrix block_wedge(const BlockMatrix& a, const BlockMatrix& b);

// Blockwise series sum.
BlockMatrix block_vee(const BlockMatrix& a, const BlockMatrix& b);

// Decision operator applied to every block; values snapped, tags updated.
BlockMatrix block_decision(const BlockMatrix& m);

struct ClosureResult {
    BlockMatrix m;
    int steps;
    // Single cluster under the transitive closure of the Identity-tag
    // relation. Implied by, but weaker than, every block being Identity.
    bool connected;
};

// Per-step snapshots: snapshots[k] is the state after step k (index 0 is the
// initial identity).
struct ClosureTrace {
    std::vector<BlockMatrix> snapshots;
};

// Iterated block closure from the identity: at step t the running matrix
// absorbs the t-th power of the compressed adjacency,
//   P(1) = decision(adjacency wedge identity),  P(t) = P(t-1) wedge adjacency,
//   M(t) = decision(M(t-1) vee P(t)),
// for t = 1..n, stopping early once every block is tagged Identity. A
// single-vertex graph returns immediately with steps = 0.
ClosureResult warshall_run(const MwGraph& g, ClosureTrace* trace = nullptr);

// Merges i, j whenever block (i,j) is tagged Identity.
Partition warshall_partition(const BlockMatrix& m_final);

}  // namespace mwg
