#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mwg/partition.hpp"
#include "mwg/psd.hpp"

namespace mwg {

// Raw edge description handed to build_graph. Vertex ids are 1-based.
struct WeightSpec {
    int u;
    int v;
    Eigen::MatrixXd weight;
};

struct Edge {
    int u;  // u < v after validation
    int v;
    PsdMatrix weight;
};

// Undirected graph with d x d PSD edge weights. Immutable after construction;
// read-shared across threads freely.
class MwGraph {
public:
    int n() const { return n_; }
    int d() const { return d_; }
    int m() const { return static_cast<int>(edges_.size()); }
    // Sorted by (u, v).
    const std::vector<Edge>& edges() const { return edges_; }
    // neighbors(v): (neighbor id, index into edges()), neighbor ascending.
    const std::vector<std::pair<int, int>>& neighbors(int v) const {
        return adjacency_[static_cast<std::size_t>(v - 1)];
    }
    // nullptr when the vertices are not adjacent. Throws BadVertexId.
    const PsdMatrix* weight_between(int u, int v) const;
    const TolerancePolicy& tol() const { return tol_; }

    void check_vertex(int v) const;

private:
    friend MwGraph build_graph(int n, int d, const std::vector<WeightSpec>& edges,
                               const TolerancePolicy& tol);
    MwGraph(int n, int d, std::vector<Edge> edges, TolerancePolicy tol);

    int n_;
    int d_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
    TolerancePolicy tol_;
};

// Validates ids, loops, duplicates, dimensions and PSD-ness (errors name the
// offending edge), normalizes to u < v and sorts edges lexicographically.
MwGraph build_graph(int n, int d, const std::vector<WeightSpec>& edges,
                    const TolerancePolicy& tol = TolerancePolicy::defaults());

struct GraphMatrices {
    // m x n; row e has +1 at the lower endpoint of edge e and -1 at the upper.
    Eigen::MatrixXd incidence;
    // dm x dm block diagonal of edge weights, edge order as in edges().
    Eigen::MatrixXd weight_block;
    // dn x dn; built as degree-minus-adjacency and cross-checked against the
    // incidence form (H^T kron I) W (H kron I) to 1e-9 max-abs.
    PsdMatrix laplacian;
    std::vector<PsdMatrix> degree_blocks;
};

GraphMatrices laplacian(const MwGraph& g);

// Connected components of the unweighted skeleton.
Partition topological_components(const MwGraph& g);

}  // namespace mwg
