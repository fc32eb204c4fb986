#include "mwg/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

namespace mwg {

namespace {

std::string edge_label(int u, int v) {
    return "edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

MwGraph::MwGraph(int n, int d, std::vector<Edge> edges, TolerancePolicy tol)
    : n_(n), d_(d), edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(n)), tol_(tol) {
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const Edge& edge = edges_[static_cast<std::size_t>(e)];
        adjacency_[static_cast<std::size_t>(edge.u - 1)].emplace_back(edge.v, e);
        adjacency_[static_cast<std::size_t>(edge.v - 1)].emplace_back(edge.u, e);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

void MwGraph::check_vertex(int v) const {
    if (v < 1 || v > n_) {
        throw BadVertexId("vertex id " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    }
}

const PsdMatrix* MwGraph::weight_between(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    for (const auto& [nbr, e] : neighbors(u)) {
        if (nbr == v) return &edges_[static_cast<std::size_t>(e)].weight;
    }
    return nullptr;
}

MwGraph build_graph(int n, int d, const std::vector<WeightSpec>& edges,
                    const TolerancePolicy& tol) {
    if (n < 1) throw BadParams("vertex count must be >= 1, got " + std::to_string(n));
    if (d < 1) throw BadParams("weight dimension must be >= 1, got " + std::to_string(d));
    std::vector<Edge> validated;
    validated.reserve(edges.size());
    std::set<std::pair<int, int>> seen;
    for (const WeightSpec& spec : edges) {
        if (spec.u < 1 || spec.u > n || spec.v < 1 || spec.v > n) {
            throw BadVertexId(edge_label(spec.u, spec.v) + ": ids outside 1.." +
                              std::to_string(n));
        }
        if (spec.u == spec.v) {
            throw SelfLoop(edge_label(spec.u, spec.v) + ": self-loops are not allowed");
        }
        const int u = std::min(spec.u, spec.v);
        const int v = std::max(spec.u, spec.v);
        if (!seen.insert({u, v}).second) {
            throw DuplicateEdge(edge_label(u, v) + ": duplicate unordered pair");
        }
        if (spec.weight.rows() != d || spec.weight.cols() != d) {
            throw WeightDimMismatch(edge_label(u, v) + ": weight is " +
                                    std::to_string(spec.weight.rows()) + "x" +
                                    std::to_string(spec.weight.cols()) + ", expected " +
                                    std::to_string(d) + "x" + std::to_string(d));
        }
        try {
            validated.push_back(Edge{u, v, PsdMatrix::make(spec.weight, tol)});
        } catch (const NotPsd& e) {
            throw NotPsd(edge_label(u, v) + ": " + e.what());
        }
    }
    std::sort(validated.begin(), validated.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return MwGraph(n, d, std::move(validated), tol);
}

GraphMatrices laplacian(const MwGraph& g) {
    const int n = g.n();
    const int d = g.d();
    const int m = g.m();

    Eigen::MatrixXd direct = Eigen::MatrixXd::Zero(n * d, n * d);
    for (const Edge& e : g.edges()) {
        const auto& w = e.weight.entries();
        const int iu = (e.u - 1) * d;
        const int iv = (e.v - 1) * d;
        direct.block(iu, iu, d, d) += w;
        direct.block(iv, iv, d, d) += w;
        direct.block(iu, iv, d, d) -= w;
        direct.block(iv, iu, d, d) -= w;
    }

    Eigen::MatrixXd incidence = Eigen::MatrixXd::Zero(m, n);
    Eigen::MatrixXd weight_block = Eigen::MatrixXd::Zero(m * d, m * d);
    for (int e = 0; e < m; ++e) {
        const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
        incidence(e, edge.u - 1) = 1.0;  // lower id is the start vertex
        incidence(e, edge.v - 1) = -1.0;
        weight_block.block(e * d, e * d, d, d) = edge.weight.entries();
    }
    const Eigen::MatrixXd lifted =
        Eigen::kroneckerProduct(incidence, Eigen::MatrixXd::Identity(d, d)).eval();
    const Eigen::MatrixXd via_incidence = lifted.transpose() * weight_block * lifted;

    // The two constructions must agree; a mismatch means a bookkeeping bug.
    const double gap = (direct - via_incidence).cwiseAbs().maxCoeff();
    if (gap > 1e-9) {
        throw Error("laplacian cross-check failed, constructions differ by " +
                    std::to_string(gap));
    }

    std::vector<PsdMatrix> degree_blocks;
    degree_blocks.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
        PsdMatrix deg = PsdMatrix::zero(d, g.tol());
        for (const auto& [nbr, e] : g.neighbors(v)) {
            deg = series_sum(deg, g.edges()[static_cast<std::size_t>(e)].weight);
        }
        degree_blocks.push_back(std::move(deg));
    }

    return GraphMatrices{std::move(incidence), std::move(weight_block),
                         PsdMatrix::make(direct, g.tol()), std::move(degree_blocks)};
}

Partition topological_components(const MwGraph& g) {
    const int n = g.n();
    UnionFind uf(n);
    for (const Edge& e : g.edges()) uf.unite(e.u - 1, e.v - 1);
    return partition_from_relation(
        n, [&](int i, int j) { return uf.find(i - 1) == uf.find(j - 1); },
        Provenance::Topology);
}

}  // namespace mwg
