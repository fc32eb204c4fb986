#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mwg/graph.hpp"
#include "mwg/partition.hpp"
#include "mwg/subspace.hpp"

namespace mwg {

// Cap on enumerated paths per vertex pair; exceeding it raises
// PathBudgetExceeded rather than letting dense graphs hang the search.
inline constexpr std::size_t kDefaultPathBudget = 1'000'000;

// Calls visit for every simple i -> j path exactly once, in nondecreasing
// length order (iterative deepening; neighbors explored by ascending id, so
// the order within a length is lexicographic). Paths are 1-based vertex
// sequences starting at i and ending at j. Return false from visit to stop.
void for_each_simple_path(const MwGraph& g, int i, int j,
                          const std::function<bool(const std::vector<int>&)>& visit,
                          std::size_t budget = kDefaultPathBudget);

std::vector<std::vector<int>> enumerate_simple_paths(const MwGraph& g, int i, int j,
                                                     std::size_t budget = kDefaultPathBudget);

// Subspace sum of the edge-weight kernels along the sequence. Consecutive
// vertices must be adjacent; vertex repetition is allowed (the sum is
// idempotent), so this also evaluates walk kernels.
Subspace path_kernel(const MwGraph& g, const std::vector<int>& path);

// Intersection of path kernels over all simple i -> j paths. No connecting
// path yields the full space: a vacuous intersection never certifies
// clustering. With early_stop the search ends once the intersection is {0}.
Subspace pair_kernel(const MwGraph& g, int i, int j, bool early_stop = true,
                     std::size_t budget = kDefaultPathBudget);

// Full per-pair detail: every simple path and the accumulated kernel.
struct PathSet {
    int source;
    int target;
    std::vector<std::vector<int>> paths;
    Subspace accumulated_kernel;
};

PathSet pair_paths(const MwGraph& g, int i, int j,
                   std::size_t budget = kDefaultPathBudget);

struct BruteForceResult {
    bool connected;  // the merged partition is a single cluster
    Partition partition;
};

// Pairwise kernel test over all i < j, merged by union-find closure.
BruteForceResult brute_force_partition(const MwGraph& g, bool early_stop = true,
                                       std::size_t budget = kDefaultPathBudget);

}  // namespace mwg
