#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwg/graph.hpp"

namespace mwg {

// File format: {"n": int, "d": int, "edges": [{"u": int, "v": int,
// "w": [[num,...],...]}, ...]} with 1-based ids and full (both triangles)
// weight matrices. Weights are symmetrized on ingest; asymmetry beyond the
// policy threshold is reported as a warning, not an error.
struct ParsedGraph {
    MwGraph graph;
    std::vector<std::string> warnings;
};

ParsedGraph parse_graph_file(const std::string& path,
                             const TolerancePolicy& tol = TolerancePolicy::defaults());

// origin labels error messages (a file path or a synthetic name).
ParsedGraph parse_graph_text(const std::string& text, const std::string& origin,
                             const TolerancePolicy& tol = TolerancePolicy::defaults());

// Canonical JSON with stable key order; parse(serialize(g)) round-trips the
// Laplacian exactly (shortest round-trip float formatting).
std::string serialize_graph(const MwGraph& g);

enum class RankProfile {
    Full,       // every weight rank d (positive definite)
    Deficient,  // rank d-1 (rank 1 when d == 1)
    Mixed,      // rank uniform in 1..d
};

struct GenParams {
    int n = 0;
    int d = 0;
    std::uint64_t seed = 0;
    double edge_prob = 0.5;
    RankProfile profile = RankProfile::Mixed;
};

// Deterministic pseudo-random instance: edges sampled per pair, weights G^T G
// from uniform(-1,1) factors with the requested rank. The draw sequence is
// fixed, so an identical seed yields a byte-identical file.
std::string generate_graph_text(const GenParams& params);

}  // namespace mwg
