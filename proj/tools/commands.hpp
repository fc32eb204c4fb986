#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "mwg/paths.hpp"
#include "mwg/tolerance.hpp"

namespace mwg::cli {

// Shared flags for the graph-reading commands. algorithm left empty picks the
// per-command default (check: oracle, clusters: warshall).
struct CommonOptions {
    std::string path;
    std::string algorithm;
    std::string dump_m;
    bool json = false;
    double tol_rel = TolerancePolicy::defaults().rel_zero;
    double tol_abs = TolerancePolicy::defaults().abs_zero;
    std::size_t path_budget = kDefaultPathBudget;
};

struct GenOptions {
    int n = 0;
    int d = 0;
    std::uint64_t seed = 0;
    double edge_prob = 0.5;
    std::string rank_profile = "mixed";
    std::string output;  // empty writes to stdout
};

// Each command returns its process exit code: 0 connected / success,
// 1 clustering (or a soundness violation for compare), 2 never (errors throw).
int run_check(const CommonOptions& opts, std::ostream& out, std::ostream& err);
int run_clusters(const CommonOptions& opts, std::ostream& out, std::ostream& err);
int run_compare(const CommonOptions& opts, std::ostream& out, std::ostream& err);
int run_info(const CommonOptions& opts, std::ostream& out, std::ostream& err);
int run_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace mwg::cli
