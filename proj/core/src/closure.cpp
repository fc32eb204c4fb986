#include "mwg/closure.hpp"

namespace mwg {

BlockMatrix::BlockMatrix(int n, int d, const PsdMatrix& fill, DecisionTag fill_tag)
    : n_(n), d_(d),
      blocks_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill),
      tags_(blocks_.size(), fill_tag) {}

BlockMatrix BlockMatrix::identity(int n, int d, const TolerancePolicy& tol) {
    BlockMatrix m(n, d, PsdMatrix::zero(d, tol), DecisionTag::Zero);
    const PsdMatrix eye = PsdMatrix::identity(d, tol);
    for (int i = 1; i <= n; ++i) m.set(i, i, eye, DecisionTag::Identity);
    return m;
}

std::size_t BlockMatrix::index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
}

const PsdMatrix& BlockMatrix::block(int i, int j) const { return blocks_[index(i, j)]; }

DecisionTag BlockMatrix::tag(int i, int j) const { return tags_[index(i, j)]; }

void BlockMatrix::set(int i, int j, const PsdMatrix& value, DecisionTag tag) {
    blocks_[index(i, j)] = value;
    tags_[index(i, j)] = tag;
    if (i != j) {
        blocks_[index(j, i)] = value;
        tags_[index(j, i)] = tag;
    }
}

bool BlockMatrix::all_identity() const {
    for (const DecisionTag tag : tags_) {
        if (tag != DecisionTag::Identity) return false;
    }
    return true;
}

bool BlockMatrix::tags_equal(const BlockMatrix& other) const {
    return n_ == other.n_ && d_ == other.d_ && tags_ == other.tags_;
}

BlockMatrix block_adjacency(const MwGraph& g) {
    BlockMatrix adjacency(g.n(), g.d(), PsdMatrix::zero(g.d(), g.tol()), DecisionTag::Zero);
    for (const Edge& e : g.edges()) {
        // Raw weight; the tag records what the decision operator would say.
        adjacency.set(e.u, e.v, e.weight, decision(e.weight).tag);
    }
    return adjacency;
}

namespace {

void require_compatible(const BlockMatrix& a, const BlockMatrix& b, const char* op) {
    if (a.block_count() != b.block_count() || a.block_dim() != b.block_dim()) {
        throw DimMismatch(std::string(op) + " of incompatible block matrices (" +
                          std::to_string(a.block_count()) + "/" + std::to_string(a.block_dim()) +
                          " vs " + std::to_string(b.block_count()) + "/" +
                          std::to_string(b.block_dim()) + ")");
    }
}

}  // namespace

BlockMatrix block_wedge(const BlockMatrix& a, const BlockMatrix& b) {
    require_compatible(a, b, "wedge");
    const int n = a.block_count();
    const int d = a.block_dim();
    const TolerancePolicy tol = a.block(1, 1).tol();
    BlockMatrix result(n, d, PsdMatrix::zero(d, tol), DecisionTag::Zero);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            PsdMatrix acc = PsdMatrix::zero(d, tol);
            for (int k = 1; k <= n; ++k) {  // fixed ascending order
                acc = series_sum(acc, parallel_sum(a.block(i, k), b.block(k, j)));
            }
            result.set(i, j, acc, decision(acc).tag);
        }
    }
    return result;
}

BlockMatrix block_vee(const BlockMatrix& a, const BlockMatrix& b) {
    require_compatible(a, b, "vee");
    const int n = a.block_count();
    const int d = a.block_dim();
    const TolerancePolicy tol = a.block(1, 1).tol();
    BlockMatrix result(n, d, PsdMatrix::zero(d, tol), DecisionTag::Zero);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const PsdMatrix total = series_sum(a.block(i, j), b.block(i, j));
            result.set(i, j, total, decision(total).tag);
        }
    }
    return result;
}

BlockMatrix block_decision(const BlockMatrix& m) {
    const int n = m.block_count();
    const int d = m.block_dim();
    const TolerancePolicy tol = m.block(1, 1).tol();
    BlockMatrix result(n, d, PsdMatrix::zero(d, tol), DecisionTag::Zero);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const Decided decided = decision(m.block(i, j));
            result.set(i, j, decided.value, decided.tag);
        }
    }
    return result;
}

ClosureResult warshall_run(const MwGraph& g, ClosureTrace* trace) {
    const int n = g.n();
    const int d = g.d();
    BlockMatrix m = BlockMatrix::identity(n, d, g.tol());
    if (trace) trace->snapshots = {m};
    if (m.all_identity()) {
        // Single vertex: nothing to close over.
        return ClosureResult{std::move(m), 0, true};
    }
    const BlockMatrix adjacency = block_adjacency(g);
    // Power sequence: the first power compresses each edge weight through the
    // identity; later powers extend by one raw adjacency factor.
    BlockMatrix power =
        block_decision(block_wedge(adjacency, BlockMatrix::identity(n, d, g.tol())));
    int steps = 0;
    for (int t = 1; t <= n; ++t) {
        if (t > 1) power = block_wedge(power, adjacency);
        m = block_decision(block_vee(m, power));
        steps = t;
        if (trace) trace->snapshots.push_back(m);
        if (m.all_identity()) break;
    }
    // Identity blocks certify pairs; the cluster relation is their transitive
    // closure, so connectivity is a single cluster, not all-blocks-identity.
    // The two can differ: chains of certified pairs may join vertices whose
    // direct block never reaches full rank.
    const bool connected = warshall_partition(m).single_cluster();
    return ClosureResult{std::move(m), steps, connected};
}

Partition warshall_partition(const BlockMatrix& m_final) {
    return partition_from_relation(
        m_final.block_count(),
        [&](int i, int j) { return m_final.tag(i, j) == DecisionTag::Identity; },
        Provenance::Warshall);
}

}  // namespace mwg
