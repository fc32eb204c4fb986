#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "mwg/errors.hpp"

namespace {

void add_common(CLI::App* cmd, mwg::cli::CommonOptions& opts, bool with_algorithm,
                bool with_dump) {
    cmd->add_option("path", opts.path, "graph file")->required();
    if (with_algorithm) {
        cmd->add_option("--algorithm", opts.algorithm, "warshall, brute-force, or oracle")
            ->check(CLI::IsMember({"warshall", "brute-force", "oracle"}));
    }
    if (with_dump) {
        cmd->add_option("--dump-m", opts.dump_m,
                        "write the final closure block matrix to this path");
    }
    cmd->add_flag("--json", opts.json, "machine-readable report");
    cmd->add_option("--tol-rel", opts.tol_rel, "relative zero threshold");
    cmd->add_option("--tol-abs", opts.tol_abs, "absolute zero threshold");
    cmd->add_option("--path-budget", opts.path_budget, "per-pair simple path budget");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix-weighted graph connectivity and clustering"};
    app.require_subcommand(1);

    mwg::cli::CommonOptions check_opts, clusters_opts, compare_opts, info_opts;
    mwg::cli::GenOptions gen_opts;

    CLI::App* check = app.add_subcommand("check", "connectivity verdict");
    add_common(check, check_opts, true, true);
    CLI::App* clusters = app.add_subcommand("clusters", "cluster partition");
    add_common(clusters, clusters_opts, true, true);
    CLI::App* compare = app.add_subcommand("compare", "cross-method soundness report");
    add_common(compare, compare_opts, false, true);
    CLI::App* info = app.add_subcommand("info", "graph summary");
    add_common(info, info_opts, false, false);

    CLI::App* gen = app.add_subcommand("gen", "generate a pseudo-random graph");
    gen->add_option("n", gen_opts.n, "vertex count")->required();
    gen->add_option("d", gen_opts.d, "weight dimension")->required();
    gen->add_option("--seed", gen_opts.seed, "random seed");
    gen->add_option("--edge-prob", gen_opts.edge_prob, "edge probability");
    gen->add_option("--rank-profile", gen_opts.rank_profile, "full, deficient, or mixed")
        ->check(CLI::IsMember({"full", "deficient", "mixed"}));
    gen->add_option("--output", gen_opts.output, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return mwg::cli::run_check(check_opts, std::cout, std::cerr);
        if (*clusters) return mwg::cli::run_clusters(clusters_opts, std::cout, std::cerr);
        if (*compare) return mwg::cli::run_compare(compare_opts, std::cout, std::cerr);
        if (*info) return mwg::cli::run_info(info_opts, std::cout, std::cerr);
        if (*gen) return mwg::cli::run_gen(gen_opts, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
