#include "mwg/paths.hpp"

namespace mwg {

namespace {

// Depth-first walker emitting simple i -> j paths of one exact length.
// Neighbors are explored by ascending id. The target never appears in the
// interior of a simple i -> j path, so reaching it always closes the branch.
class ExactLengthSearch {
public:
    ExactLengthSearch(const MwGraph& g, int target, std::size_t budget,
                      const std::function<bool(const std::vector<int>&)>& visit)
        : g_(g), target_(target), budget_(budget), visit_(visit),
          used_(static_cast<std::size_t>(g.n()) + 1, false) {}

    // Returns false when the visitor asked to stop.
    bool run(int start, int length) {
        path_.clear();
        path_.push_back(start);
        used_.assign(used_.size(), false);
        used_[static_cast<std::size_t>(start)] = true;
        return extend(start, length);
    }

    std::size_t emitted() const { return emitted_; }

private:
    bool extend(int v, int remaining) {
        for (const auto& [nbr, edge] : g_.neighbors(v)) {
            (void)edge;
            if (nbr == target_) {
                if (remaining == 1) {
                    if (++emitted_ > budget_) {
                        throw PathBudgetExceeded(
                            "more than " + std::to_string(budget_) + " simple paths between " +
                            std::to_string(path_.front()) + " and " + std::to_string(target_));
                    }
                    path_.push_back(target_);
                    const bool keep_going = visit_(path_);
                    path_.pop_back();
                    if (!keep_going) return false;
                }
                continue;
            }
            if (remaining > 1 && !used_[static_cast<std::size_t>(nbr)]) {
                used_[static_cast<std::size_t>(nbr)] = true;
                path_.push_back(nbr);
                const bool keep_going = extend(nbr, remaining - 1);
                path_.pop_back();
                used_[static_cast<std::size_t>(nbr)] = false;
                if (!keep_going) return false;
            }
        }
        return true;
    }

    const MwGraph& g_;
    int target_;
    std::size_t budget_;
    const std::function<bool(const std::vector<int>&)>& visit_;
    std::vector<bool> used_;
    std::vector<int> path_;
    std::size_t emitted_ = 0;
};

}  // namespace

void for_each_simple_path(const MwGraph& g, int i, int j,
                          const std::function<bool(const std::vector<int>&)>& visit,
                          std::size_t budget) {
    g.check_vertex(i);
    g.check_vertex(j);
    if (i == j) {
        throw BadVertexId("path endpoints must differ, got " + std::to_string(i) + " twice");
    }
    // Iterative deepening yields nondecreasing length order; a simple path
    // has at most n-1 edges.
    ExactLengthSearch search(g, j, budget, visit);
    for (int length = 1; length <= g.n() - 1; ++length) {
        if (!search.run(i, length)) return;
    }
}

std::vector<std::vector<int>> enumerate_simple_paths(const MwGraph& g, int i, int j,
                                                     std::size_t budget) {
    std::vector<std::vector<int>> paths;
    for_each_simple_path(
        g, i, j,
        [&](const std::vector<int>& path) {
            paths.push_back(path);
            return true;
        },
        budget);
    return paths;
}

Subspace path_kernel(const MwGraph& g, const std::vector<int>& path) {
    // A zero-length sequence has an empty kernel sum, which would wrongly
    // certify a same-cluster pair; demand at least one edge.
    if (path.size() < 2) throw NotAPath("need at least two vertices");
    Subspace accumulated = Subspace::trivial(g.d());
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const PsdMatrix* weight = g.weight_between(path[k], path[k + 1]);
        if (weight == nullptr) {
            throw NotAPath("vertices " + std::to_string(path[k]) + " and " +
                           std::to_string(path[k + 1]) + " are not adjacent");
        }
        accumulated = sum(accumulated, kernel_of(*weight), g.tol());
    }
    return accumulated;
}

Subspace pair_kernel(const MwGraph& g, int i, int j, bool early_stop, std::size_t budget) {
    Subspace accumulated = Subspace::full(g.d());
    for_each_simple_path(
        g, i, j,
        [&](const std::vector<int>& path) {
            accumulated = intersect(accumulated, path_kernel(g, path), g.tol());
            return !(early_stop && accumulated.dim() == 0);
        },
        budget);
    return accumulated;
}

PathSet pair_paths(const MwGraph& g, int i, int j, std::size_t budget) {
    PathSet set{i, j, {}, Subspace::full(g.d())};
    for_each_simple_path(
        g, i, j,
        [&](const std::vector<int>& path) {
            set.paths.push_back(path);
            set.accumulated_kernel = intersect(set.accumulated_kernel, path_kernel(g, path), g.tol());
            return true;
        },
        budget);
    return set;
}

BruteForceResult brute_force_partition(const MwGraph& g, bool early_stop, std::size_t budget) {
    const int n = g.n();
    // The pairwise relation is not transitive in general; clusters are its
    // union-find closure.
    std::vector<std::vector<bool>> joined(static_cast<std::size_t>(n) + 1,
                                          std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            joined[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                pair_kernel(g, i, j, early_stop, budget).dim() == 0;
        }
    }
    Partition partition = partition_from_relation(
        n,
        [&](int i, int j) { return joined[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; },
        Provenance::BruteForce);
    const bool connected = partition.single_cluster();
    return BruteForceResult{connected, std::move(partition)};
}

}  // namespace mwg
