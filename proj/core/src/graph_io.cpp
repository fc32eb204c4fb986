#include "mwg/graph_io.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace mwg {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& origin, const std::string& what) {
    throw ParseError(origin + ": " + what);
}

int require_int(const json& j, const std::string& origin, const std::string& label) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) {
        parse_fail(origin, label + " must be an integer");
    }
    return j.get<int>();
}

const json& require_field(const json& obj, const char* key, const std::string& origin,
                          const std::string& label) {
    auto it = obj.find(key);
    if (it == obj.end()) parse_fail(origin, label + " is missing field \"" + std::string(key) + "\"");
    return *it;
}

Eigen::MatrixXd require_matrix(const json& j, int d, const std::string& origin,
                               const std::string& label) {
    if (!j.is_array() || static_cast<int>(j.size()) != d) {
        parse_fail(origin, label + " must be a " + std::to_string(d) + "x" + std::to_string(d) +
                               " array of numbers");
    }
    Eigen::MatrixXd w(d, d);
    for (int r = 0; r < d; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != d) {
            parse_fail(origin, label + " row " + std::to_string(r) + " must have " +
                                   std::to_string(d) + " entries");
        }
        for (int c = 0; c < d; ++c) {
            const json& cell = row[static_cast<std::size_t>(c)];
            if (!cell.is_number()) {
                parse_fail(origin, label + " entry (" + std::to_string(r) + "," +
                                       std::to_string(c) + ") must be a number");
            }
            w(r, c) = cell.get<double>();
        }
    }
    return w;
}

}  // namespace

ParsedGraph parse_graph_text(const std::string& text, const std::string& origin,
                             const TolerancePolicy& tol) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(origin, e.what());
    }
    if (!root.is_object()) parse_fail(origin, "top-level value must be an object");

    const int n = require_int(require_field(root, "n", origin, "document"), origin, "\"n\"");
    const int d = require_int(require_field(root, "d", origin, "document"), origin, "\"d\"");
    const json& edges = require_field(root, "edges", origin, "document");
    if (!edges.is_array()) parse_fail(origin, "\"edges\" must be an array");
    if (n < 1) parse_fail(origin, "\"n\" must be at least 1");
    if (d < 1) parse_fail(origin, "\"d\" must be at least 1");

    std::vector<std::string> warnings;
    std::vector<WeightSpec> specs;
    specs.reserve(edges.size());
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
        const std::string label = "edges[" + std::to_string(idx) + "]";
        const json& entry = edges[idx];
        if (!entry.is_object()) parse_fail(origin, label + " must be an object");
        const int u = require_int(require_field(entry, "u", origin, label), origin, label + ".u");
        const int v = require_int(require_field(entry, "v", origin, label), origin, label + ".v");
        Eigen::MatrixXd w =
            require_matrix(require_field(entry, "w", origin, label), d, origin, label + ".w");
        const double gap = (w - w.transpose()).cwiseAbs().maxCoeff();
        if (gap > tol.symmetry_warn) {
            std::ostringstream msg;
            msg << origin << ": " << label << " weight asymmetry " << gap
                << " exceeds " << tol.symmetry_warn << "; symmetrized";
            warnings.push_back(msg.str());
        }
        w = ((w + w.transpose()) / 2.0).eval();
        specs.push_back(WeightSpec{u, v, std::move(w)});
    }

    return ParsedGraph{build_graph(n, d, specs, tol), std::move(warnings)};
}

ParsedGraph parse_graph_file(const std::string& path, const TolerancePolicy& tol) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path);
    return parse_graph_text(buffer.str(), path, tol);
}

std::string serialize_graph(const MwGraph& g) {
    json root;
    root["n"] = g.n();
    root["d"] = g.d();
    json edge_list = json::array();
    for (const Edge& e : g.edges()) {
        const Eigen::MatrixXd& w = e.weight.entries();
        json rows = json::array();
        for (int r = 0; r < g.d(); ++r) {
            json row = json::array();
            for (int c = 0; c < g.d(); ++c) row.push_back(w(r, c));
            rows.push_back(std::move(row));
        }
        json entry;
        entry["u"] = e.u;
        entry["v"] = e.v;
        entry["w"] = std::move(rows);
        edge_list.push_back(std::move(entry));
    }
    root["edges"] = std::move(edge_list);
    return root.dump(2) + "\n";
}

std::string generate_graph_text(const GenParams& params) {
    if (params.n < 2) throw BadParams("generator needs at least 2 vertices");
    if (params.d < 1) throw BadParams("generator needs dimension at least 1");
    if (!(params.edge_prob >= 0.0 && params.edge_prob <= 1.0)) {
        throw BadParams("edge probability must lie in [0, 1]");
    }

    std::mt19937_64 rng(params.seed);
    // Fixed draw sequence (no distribution objects, whose outputs vary across
    // standard library implementations): 53-bit mantissa uniforms.
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    auto uniform_pm1 = [&unit]() { return 2.0 * unit() - 1.0; };

    std::vector<WeightSpec> specs;
    for (int u = 1; u < params.n; ++u) {
        for (int v = u + 1; v <= params.n; ++v) {
            if (unit() >= params.edge_prob) continue;
            int rank = params.d;
            switch (params.profile) {
                case RankProfile::Full:
                    rank = params.d;
                    break;
                case RankProfile::Deficient:
                    rank = std::max(params.d - 1, 1);
                    break;
                case RankProfile::Mixed:
                    rank = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(params.d));
                    break;
            }
            Eigen::MatrixXd factor(rank, params.d);
            for (int r = 0; r < rank; ++r) {
                for (int c = 0; c < params.d; ++c) factor(r, c) = uniform_pm1();
            }
            specs.push_back(WeightSpec{u, v, factor.transpose() * factor});
        }
    }
    return serialize_graph(build_graph(params.n, params.d, specs));
}

}  // namespace mwg
