#pragma once

#include <functional>
#include <vector>

namespace mwg {

enum class Provenance { Oracle, BruteForce, Warshall, Topology };

const char* to_string(Provenance p);

// Disjoint nonempty vertex sets covering 1..n. Canonical form: ids sorted
// within each cluster, clusters sorted by their smallest id.
struct Partition {
    std::vector<std::vector<int>> clusters;
    Provenance provenance;

    bool single_cluster() const { return clusters.size() == 1; }
};

class UnionFind {
public:
    explicit UnionFind(int n);
    int find(int v);
    // Merges; returns false when already joined.
    bool unite(int a, int b);

private:
    std::vector<int> parent_;
};

// Union-find closure of a pairwise relation, queried once per pair i < j
// (1-based). The relation need not be transitive; the closure is.
Partition partition_from_relation(int n, const std::function<bool(int, int)>& same,
                                  Provenance provenance);

// Same grouping, provenance ignored.
bool same_clusters(const Partition& a, const Partition& b);

}  // namespace mwg
