#include "mwg/partition.hpp"

#include <algorithm>
#include <map>

namespace mwg {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Oracle: return "oracle";
        case Provenance::BruteForce: return "brute-force";
        case Provenance::Warshall: return "warshall";
        case Provenance::Topology: return "topology";
    }
    return "?";
}

UnionFind::UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    for (int v = 0; v < n; ++v) parent_[static_cast<std::size_t>(v)] = v;
}

int UnionFind::find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
        parent_[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
        v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
}

bool UnionFind::unite(int a, int b) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) return false;
    parent_[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    return true;
}

Partition partition_from_relation(int n, const std::function<bool(int, int)>& same,
                                  Provenance provenance) {
    UnionFind uf(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (same(i, j)) uf.unite(i - 1, j - 1);
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 1; v <= n; ++v) groups[uf.find(v - 1)].push_back(v);
    Partition part{{}, provenance};
    part.clusters.reserve(groups.size());
    for (auto& [root, members] : groups) part.clusters.push_back(std::move(members));
    // map order == order of smallest member, members inserted ascending
    return part;
}

bool same_clusters(const Partition& a, const Partition& b) {
    return a.clusters == b.clusters;
}

}  // namespace mwg
