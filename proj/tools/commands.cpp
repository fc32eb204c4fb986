#include "commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "mwg/closure.hpp"
#include "mwg/graph_io.hpp"
#include "mwg/oracle.hpp"

namespace mwg::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// Reports carry doubles snapped to 6 significant digits so the serialized
// bytes are stable regardless of how the value was computed.
double round6(double x) { return std::strtod(fmt6(x).c_str(), nullptr); }

std::string clusters_text(const std::vector<std::vector<int>>& clusters) {
    std::ostringstream os;
    os << "[";
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        if (c) os << ",";
        os << "[";
        for (std::size_t k = 0; k < clusters[c].size(); ++k) {
            if (k) os << ",";
            os << clusters[c][k];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

TolerancePolicy policy_from(const CommonOptions& opts) {
    TolerancePolicy tol = TolerancePolicy::defaults();
    tol.rel_zero = opts.tol_rel;
    tol.abs_zero = opts.tol_abs;
    return tol;
}

void emit_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
    for (const std::string& w : warnings) err << "warning: " << w << "\n";
}

std::string graph_line(const std::string& path, const MwGraph& g) {
    std::ostringstream os;
    os << "graph: " << path << " (n=" << g.n() << ", d=" << g.d() << ", m=" << g.m() << ")";
    return os.str();
}

std::string tolerance_line(const TolerancePolicy& tol) {
    return "tolerances: rel=" + fmt6(tol.rel_zero) + ", abs=" + fmt6(tol.abs_zero);
}

ordered_json tolerance_json(const TolerancePolicy& tol) {
    ordered_json j;
    j["rel"] = round6(tol.rel_zero);
    j["abs"] = round6(tol.abs_zero);
    return j;
}

ordered_json report_header(const char* command, const CommonOptions& opts, const MwGraph& g) {
    ordered_json j;
    j["command"] = command;
    j["graph"] = opts.path;
    j["n"] = g.n();
    j["d"] = g.d();
    j["m"] = g.m();
    return j;
}

void finish_json(ordered_json& j, const TolerancePolicy& tol,
                 const std::vector<std::string>& warnings, std::ostream& out) {
    j["tolerances"] = tolerance_json(tol);
    j["warnings"] = warnings;
    out << j.dump(2) << "\n";
}

void write_dump(const std::string& path, const ClosureResult& result) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    const BlockMatrix& m = result.m;
    out << "n " << m.block_count() << "\n"
        << "d " << m.block_dim() << "\n"
        << "steps " << result.steps << "\n"
        << "connected " << (result.connected ? "true" : "false") << "\n";
    for (int i = 1; i <= m.block_count(); ++i) {
        for (int j = i; j <= m.block_count(); ++j) {
            out << "block " << i << " " << j << " " << to_string(m.tag(i, j)) << "\n";
            const Eigen::MatrixXd& w = m.block(i, j).entries();
            for (int r = 0; r < m.block_dim(); ++r) {
                for (int c = 0; c < m.block_dim(); ++c) {
                    if (c) out << " ";
                    out << fmt6(w(r, c));
                }
                out << "\n";
            }
        }
    }
    if (!out) throw IoError("write failure on " + path);
}

// Parts of an oracle cluster as one heuristic partition sees it, ordered by
// first member (inherits ascending order from the cluster itself).
std::vector<std::vector<int>> induced_split(const std::vector<int>& cluster,
                                            const std::vector<int>& cluster_of) {
    std::vector<std::vector<int>> parts;
    std::map<int, std::size_t> slot;
    for (int v : cluster) {
        auto [it, fresh] = slot.try_emplace(cluster_of[static_cast<std::size_t>(v)], parts.size());
        if (fresh) parts.emplace_back();
        parts[it->second].push_back(v);
    }
    return parts;
}

std::vector<int> label_vertices(int n, const Partition& p) {
    std::vector<int> cluster_of(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t c = 0; c < p.clusters.size(); ++c) {
        for (int v : p.clusters[c]) cluster_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
    return cluster_of;
}

struct Verdict {
    bool connected = false;
    std::optional<int> steps;           // warshall only
    std::optional<int> laplacian_rank;  // oracle only
    std::optional<int> kernel_dim;      // oracle only
    std::optional<Partition> partition;
    std::optional<ClosureResult> closure;
};

Verdict evaluate(const MwGraph& g, const std::string& algorithm, std::size_t budget,
                 bool want_partition) {
    Verdict v;
    if (algorithm == "oracle") {
        const KernelReport report = oracle_kernel(g);
        v.connected = report.laplacian_rank == report.d * (report.n - 1);
        v.laplacian_rank = report.laplacian_rank;
        v.kernel_dim = report.d * report.n - report.laplacian_rank;
        if (want_partition) v.partition = oracle_partition(g);
    } else if (algorithm == "brute-force") {
        BruteForceResult result = brute_force_partition(g, true, budget);
        v.connected = result.connected;
        if (want_partition) v.partition = std::move(result.partition);
    } else if (algorithm == "warshall") {
        ClosureResult result = warshall_run(g);
        v.connected = result.connected;
        v.steps = result.steps;
        if (want_partition) v.partition = warshall_partition(result.m);
        v.closure = std::move(result);
    } else {
        throw BadParams("unknown algorithm \"" + algorithm + "\"");
    }
    return v;
}

void maybe_dump(const CommonOptions& opts, const MwGraph& g, const Verdict& v) {
    if (opts.dump_m.empty()) return;
    if (v.closure) {
        write_dump(opts.dump_m, *v.closure);
    } else {
        write_dump(opts.dump_m, warshall_run(g));
    }
}

}  // namespace

int run_check(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    const TolerancePolicy tol = policy_from(opts);
    const ParsedGraph parsed = parse_graph_file(opts.path, tol);
    emit_warnings(parsed.warnings, err);
    const std::string algorithm = opts.algorithm.empty() ? "oracle" : opts.algorithm;
    const Verdict v = evaluate(parsed.graph, algorithm, opts.path_budget, false);
    maybe_dump(opts, parsed.graph, v);
    const char* verdict = v.connected ? "connected" : "clustering";
    if (opts.json) {
        ordered_json j = report_header("check", opts, parsed.graph);
        j["algorithm"] = algorithm;
        j["verdict"] = verdict;
        if (v.steps) j["steps"] = *v.steps;
        if (v.laplacian_rank) j["laplacian_rank"] = *v.laplacian_rank;
        if (v.kernel_dim) j["kernel_dim"] = *v.kernel_dim;
        finish_json(j, tol, parsed.warnings, out);
    } else {
        out << graph_line(opts.path, parsed.graph) << "\n";
        out << "algorithm: " << algorithm << "\n";
        out << "verdict: " << verdict << "\n";
        if (v.steps) out << "steps: " << *v.steps << "\n";
        if (v.laplacian_rank) {
            out << "laplacian rank: " << *v.laplacian_rank << " (kernel dimension " << *v.kernel_dim
                << ")\n";
        }
        out << tolerance_line(tol) << "\n";
    }
    return v.connected ? 0 : 1;
}

int run_clusters(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    const TolerancePolicy tol = policy_from(opts);
    const ParsedGraph parsed = parse_graph_file(opts.path, tol);
    emit_warnings(parsed.warnings, err);
    const std::string algorithm = opts.algorithm.empty() ? "warshall" : opts.algorithm;
    const Verdict v = evaluate(parsed.graph, algorithm, opts.path_budget, true);
    maybe_dump(opts, parsed.graph, v);
    const bool connected = v.partition->single_cluster();
    const char* verdict = connected ? "connected" : "clustering";
    if (opts.json) {
        ordered_json j = report_header("clusters", opts, parsed.graph);
        j["algorithm"] = algorithm;
        j["verdict"] = verdict;
        j["clusters"] = v.partition->clusters;
        if (v.steps) j["steps"] = *v.steps;
        if (v.laplacian_rank) j["laplacian_rank"] = *v.laplacian_rank;
        if (v.kernel_dim) j["kernel_dim"] = *v.kernel_dim;
        finish_json(j, tol, parsed.warnings, out);
    } else {
        out << graph_line(opts.path, parsed.graph) << "\n";
        out << "algorithm: " << algorithm << "\n";
        out << "verdict: " << verdict << "\n";
        out << "clusters: " << clusters_text(v.partition->clusters) << "\n";
        if (v.steps) out << "steps: " << *v.steps << "\n";
        if (v.laplacian_rank) {
            out << "laplacian rank: " << *v.laplacian_rank << " (kernel dimension " << *v.kernel_dim
                << ")\n";
        }
        out << tolerance_line(tol) << "\n";
    }
    return connected ? 0 : 1;
}

int run_compare(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    const TolerancePolicy tol = policy_from(opts);
    const ParsedGraph parsed = parse_graph_file(opts.path, tol);
    emit_warnings(parsed.warnings, err);
    const MwGraph& g = parsed.graph;

    const Partition oracle = oracle_partition(g);
    const ClosureResult closure = warshall_run(g);
    const Partition warshall = warshall_partition(closure.m);
    const BruteForceResult brute = brute_force_partition(g, true, opts.path_budget);
    if (!opts.dump_m.empty()) write_dump(opts.dump_m, closure);

    const std::vector<int> oracle_of = label_vertices(g.n(), oracle);
    const std::vector<int> warshall_of = label_vertices(g.n(), warshall);
    const std::vector<int> brute_of = label_vertices(g.n(), brute.partition);

    // Soundness: a heuristic must never merge a pair the oracle separates.
    struct Violation {
        int i, j;
        const char* method;
    };
    std::vector<Violation> violations;
    for (int i = 1; i <= g.n(); ++i) {
        for (int j = i + 1; j <= g.n(); ++j) {
            const bool o = oracle_of[static_cast<std::size_t>(i)] == oracle_of[static_cast<std::size_t>(j)];
            if (o) continue;
            if (warshall_of[static_cast<std::size_t>(i)] == warshall_of[static_cast<std::size_t>(j)]) {
                violations.push_back({i, j, "warshall"});
            }
            if (brute_of[static_cast<std::size_t>(i)] == brute_of[static_cast<std::size_t>(j)]) {
                violations.push_back({i, j, "brute-force"});
            }
        }
    }

    // Gaps: one record per oracle cluster that either heuristic fails to keep
    // whole, with the induced splits.
    struct Gap {
        std::vector<int> cluster;
        std::vector<std::vector<int>> warshall_split;
        std::vector<std::vector<int>> brute_split;
    };
    std::vector<Gap> gaps;
    for (const std::vector<int>& cluster : oracle.clusters) {
        auto w_split = induced_split(cluster, warshall_of);
        auto b_split = induced_split(cluster, brute_of);
        if (w_split.size() > 1 || b_split.size() > 1) {
            gaps.push_back({cluster, std::move(w_split), std::move(b_split)});
        }
    }

    if (opts.json) {
        ordered_json j = report_header("compare", opts, g);
        j["oracle"] = {{"clusters", oracle.clusters}};
        j["warshall"] = {{"clusters", warshall.clusters}, {"steps", closure.steps}};
        j["brute_force"] = {{"clusters", brute.partition.clusters}};
        ordered_json gap_list = ordered_json::array();
        for (const Gap& gap : gaps) {
            ordered_json entry;
            entry["oracle_cluster"] = gap.cluster;
            entry["warshall_split"] = gap.warshall_split;
            entry["brute_force_split"] = gap.brute_split;
            gap_list.push_back(std::move(entry));
        }
        j["known_gaps"] = std::move(gap_list);
        ordered_json violation_list = ordered_json::array();
        for (const Violation& v : violations) {
            ordered_json entry;
            entry["i"] = v.i;
            entry["j"] = v.j;
            entry["method"] = v.method;
            violation_list.push_back(std::move(entry));
        }
        j["violations"] = std::move(violation_list);
        finish_json(j, tol, parsed.warnings, out);
    } else {
        out << graph_line(opts.path, g) << "\n";
        out << "oracle: " << clusters_text(oracle.clusters) << "\n";
        out << "warshall: " << clusters_text(warshall.clusters) << " (steps " << closure.steps
            << ")\n";
        out << "brute-force: " << clusters_text(brute.partition.clusters) << "\n";
        for (const Gap& gap : gaps) {
            std::vector<std::vector<int>> one{gap.cluster};
            out << "KNOWN GAP: oracle cluster " << clusters_text(one) << "; warshall keeps "
                << clusters_text(gap.warshall_split) << "; brute-force keeps "
                << clusters_text(gap.brute_split) << "\n";
        }
        for (const Violation& v : violations) {
            out << "SOUNDNESS VIOLATION: pair (" << v.i << "," << v.j << ") merged by " << v.method
                << ", separated by oracle\n";
        }
        out << "known gaps: " << gaps.size() << "\n";
        out << "soundness violations: " << violations.size() << "\n";
        out << tolerance_line(tol) << "\n";
    }
    return violations.empty() ? 0 : 1;
}

int run_info(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    const TolerancePolicy tol = policy_from(opts);
    const ParsedGraph parsed = parse_graph_file(opts.path, tol);
    emit_warnings(parsed.warnings, err);
    const MwGraph& g = parsed.graph;
    const Partition topo = topological_components(g);
    const KernelReport report = oracle_kernel(g);
    const int kernel_dim = g.d() * g.n() - report.laplacian_rank;
    if (opts.json) {
        ordered_json j = report_header("info", opts, g);
        j["topological_components"] = topo.clusters;
        j["laplacian_rank"] = report.laplacian_rank;
        j["kernel_dim"] = kernel_dim;
        finish_json(j, tol, parsed.warnings, out);
    } else {
        out << graph_line(opts.path, g) << "\n";
        out << "topological components: " << clusters_text(topo.clusters) << "\n";
        out << "laplacian rank: " << report.laplacian_rank << " (kernel dimension " << kernel_dim
            << ")\n";
        out << tolerance_line(tol) << "\n";
    }
    return 0;
}

int run_gen(const GenOptions& opts, std::ostream& out, std::ostream&) {
    GenParams params;
    params.n = opts.n;
    params.d = opts.d;
    params.seed = opts.seed;
    params.edge_prob = opts.edge_prob;
    if (opts.rank_profile == "full") {
        params.profile = RankProfile::Full;
    } else if (opts.rank_profile == "deficient") {
        params.profile = RankProfile::Deficient;
    } else if (opts.rank_profile == "mixed") {
        params.profile = RankProfile::Mixed;
    } else {
        throw BadParams("unknown rank profile \"" + opts.rank_profile + "\"");
    }
    const std::string text = generate_graph_text(params);
    if (opts.output.empty()) {
        out << text;
    } else {
        std::ofstream file(opts.output, std::ios::binary);
        if (!file) throw IoError("cannot open " + opts.output + " for writing");
        file << text;
        if (!file) throw IoError("write failure on " + opts.output);
    }
    return 0;
}

}  // namespace mwg::cli
