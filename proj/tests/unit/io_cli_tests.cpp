#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "doctest.h"
#include "mwg/graph_io.hpp"
#include "mwg/oracle.hpp"
#include "support/test_graphs.hpp"

using mwg::GenParams;
using mwg::parse_graph_file;
using mwg::parse_graph_text;
using mwg::RankProfile;
using mwg::serialize_graph;

namespace {

std::string examples_dir() { return MWG_EXAMPLES_DIR; }

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    REQUIRE(out.good());
    return path.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("bundled example files parse to the worked graphs") {
    const auto one = parse_graph_file(examples_dir() + "/ex1.json");
    CHECK(one.warnings.empty());
    CHECK(one.graph.n() == 9);
    CHECK(one.graph.d() == 3);
    CHECK(one.graph.m() == 14);
    // File truncates sqrt(3)/2 to 12 digits; builder uses the double value.
    const mwg::MwGraph built = mwg::testing::example_one();
    const Eigen::MatrixXd gap = mwg::laplacian(one.graph).laplacian.entries() -
                                mwg::laplacian(built).laplacian.entries();
    CHECK(gap.cwiseAbs().maxCoeff() < 1e-11);

    CHECK(parse_graph_file(examples_dir() + "/ex2.json").graph.m() == 7);
    CHECK(parse_graph_file(examples_dir() + "/ex3.json").graph.m() == 3);
    CHECK(parse_graph_file(examples_dir() + "/ex4.json").graph.m() == 7);
}

TEST_CASE("serialize-parse round trip preserves the Laplacian") {
    const mwg::MwGraph g = mwg::testing::example_two();
    const auto back = parse_graph_text(serialize_graph(g), "round-trip");
    CHECK(back.warnings.empty());
    const Eigen::MatrixXd gap =
        mwg::laplacian(back.graph).laplacian.entries() - mwg::laplacian(g).laplacian.entries();
    CHECK(gap.cwiseAbs().maxCoeff() < 1e-12);
    // Serializing the same object twice is byte-identical. Re-ingested bytes
    // may drift below the Laplacian tolerance: rank-deficient weights are
    // rebuilt from their clamped spectrum on construction.
    CHECK(serialize_graph(g) == serialize_graph(g));
    CHECK(serialize_graph(back.graph) == serialize_graph(back.graph));
}

TEST_CASE("parse rejects malformed documents with positioned messages") {
    CHECK_THROWS_AS(parse_graph_text("{", "t"), mwg::ParseError);
    CHECK_THROWS_AS(parse_graph_text("[]", "t"), mwg::ParseError);
    CHECK_THROWS_AS(parse_graph_text(R"({"d":2,"edges":[]})", "t"), mwg::ParseError);
    CHECK_THROWS_AS(parse_graph_text(R"({"n":2.5,"d":2,"edges":[]})", "t"), mwg::ParseError);
    CHECK_THROWS_AS(parse_graph_text(R"({"n":0,"d":2,"edges":[]})", "t"), mwg::ParseError);
    CHECK_THROWS_AS(parse_graph_text(R"({"n":2,"d":2,"edges":[{"u":1,"v":2}]})", "t"),
                    mwg::ParseError);
    CHECK_THROWS_AS(
        parse_graph_text(R"({"n":2,"d":2,"edges":[{"u":1,"v":2,"w":[[1,0],[0]]}]})", "t"),
        mwg::ParseError);

    try {
        parse_graph_text(R"({"n":2,"d":2,"edges":[{"u":1,"v":2,"w":[[1,0],[0,"x"]]}]})", "origin");
        FAIL("expected ParseError");
    } catch (const mwg::ParseError& e) {
        const std::string what = e.what();
        CHECK(what.find("origin") != std::string::npos);
        CHECK(what.find("edges[0]") != std::string::npos);
    }
}

TEST_CASE("graph validation errors pass through parse") {
    CHECK_THROWS_AS(
        parse_graph_text(R"({"n":2,"d":2,"edges":[{"u":1,"v":2,"w":[[1,0],[0,-1]]}]})", "t"),
        mwg::NotPsd);
    CHECK_THROWS_AS(
        parse_graph_text(R"({"n":2,"d":2,"edges":[{"u":2,"v":2,"w":[[1,0],[0,1]]}]})", "t"),
        mwg::SelfLoop);
    CHECK_THROWS_AS(parse_graph_file("/nonexistent/graph.json"), mwg::IoError);
}

TEST_CASE("asymmetric weights are symmetrized with a warning") {
    const auto parsed = parse_graph_text(
        R"({"n":2,"d":2,"edges":[{"u":1,"v":2,"w":[[1,0.5],[0.1,1]]}]})", "t");
    REQUIRE(parsed.warnings.size() == 1);
    CHECK(parsed.warnings[0].find("symmetrized") != std::string::npos);
    CHECK(parsed.graph.edges()[0].weight.entries()(0, 1) == doctest::Approx(0.3));

    // Drift below the policy threshold stays silent.
    const auto quiet = parse_graph_text(
        R"({"n":2,"d":2,"edges":[{"u":1,"v":2,"w":[[1,0.5000000000001],[0.5,1]]}]})", "t");
    CHECK(quiet.warnings.empty());
}

TEST_CASE("generator is deterministic and honors its parameters") {
    GenParams params;
    params.n = 6;
    params.d = 3;
    params.seed = 7;
    const std::string a = mwg::generate_graph_text(params);
    const std::string b = mwg::generate_graph_text(params);
    CHECK(a == b);
    params.seed = 8;
    CHECK(mwg::generate_graph_text(params) != a);

    params.seed = 7;
    params.edge_prob = 0.0;
    CHECK(parse_graph_text(mwg::generate_graph_text(params), "gen").graph.m() == 0);
    params.edge_prob = 1.0;
    CHECK(parse_graph_text(mwg::generate_graph_text(params), "gen").graph.m() == 15);
}

TEST_CASE("generator rank profiles control weight rank") {
    GenParams params;
    params.n = 5;
    params.d = 3;
    params.seed = 21;
    params.edge_prob = 1.0;

    params.profile = RankProfile::Full;
    for (const auto& e : parse_graph_text(mwg::generate_graph_text(params), "gen").graph.edges()) {
        CHECK(e.weight.rank() == 3);
    }
    params.profile = RankProfile::Deficient;
    for (const auto& e : parse_graph_text(mwg::generate_graph_text(params), "gen").graph.edges()) {
        CHECK(e.weight.rank() == 2);
    }
    params.profile = RankProfile::Mixed;
    bool saw_deficient = false;
    for (const auto& e : parse_graph_text(mwg::generate_graph_text(params), "gen").graph.edges()) {
        CHECK(e.weight.rank() >= 1);
        saw_deficient = saw_deficient || e.weight.rank() < 3;
    }
    CHECK(saw_deficient);
}

TEST_CASE("generator validates parameters") {
    GenParams params;
    params.n = 1;
    params.d = 2;
    CHECK_THROWS_AS(mwg::generate_graph_text(params), mwg::BadParams);
    params.n = 3;
    params.d = 0;
    CHECK_THROWS_AS(mwg::generate_graph_text(params), mwg::BadParams);
    params.d = 2;
    params.edge_prob = 1.5;
    CHECK_THROWS_AS(mwg::generate_graph_text(params), mwg::BadParams);
}

TEST_CASE("check command verdicts and exit codes") {
    mwg::cli::CommonOptions opts;
    opts.path = examples_dir() + "/ex1.json";
    std::ostringstream out, err;
    CHECK(mwg::cli::run_check(opts, out, err) == 0);
    CHECK(out.str().find("verdict: connected") != std::string::npos);
    CHECK(out.str().find("algorithm: oracle") != std::string::npos);
    CHECK(out.str().find("laplacian rank: 24") != std::string::npos);

    opts.path = examples_dir() + "/ex2.json";
    opts.algorithm = "warshall";
    std::ostringstream out2, err2;
    CHECK(mwg::cli::run_check(opts, out2, err2) == 1);
    CHECK(out2.str().find("verdict: clustering") != std::string::npos);
    CHECK(out2.str().find("steps: 5") != std::string::npos);

    opts.algorithm = "brute-force";
    std::ostringstream out3, err3;
    CHECK(mwg::cli::run_check(opts, out3, err3) == 1);
}

TEST_CASE("clusters command renders the partition") {
    mwg::cli::CommonOptions opts;
    opts.path = examples_dir() + "/ex2.json";
    std::ostringstream out, err;
    CHECK(mwg::cli::run_clusters(opts, out, err) == 1);
    CHECK(out.str().find("clusters: [[1,4],[2],[3,5]]") != std::string::npos);

    opts.path = examples_dir() + "/ex4.json";
    opts.algorithm = "oracle";
    std::ostringstream out2, err2;
    CHECK(mwg::cli::run_clusters(opts, out2, err2) == 1);
    CHECK(out2.str().find("clusters: [[1,3,4,6],[2],[5]]") != std::string::npos);

    opts.algorithm = "warshall";
    std::ostringstream out3, err3;
    CHECK(mwg::cli::run_clusters(opts, out3, err3) == 1);
    CHECK(out3.str().find("clusters: [[1,3,4],[2],[5],[6]]") != std::string::npos);
}

TEST_CASE("clusters --dump-m writes the closure state") {
    mwg::cli::CommonOptions opts;
    opts.path = examples_dir() + "/ex3.json";
    opts.dump_m = (std::filesystem::temp_directory_path() / "mwg_dump_test.txt").string();
    std::ostringstream out, err;
    CHECK(mwg::cli::run_clusters(opts, out, err) == 1);
    const std::string dump = read_file(opts.dump_m);
    CHECK(dump.find("steps 4") != std::string::npos);
    CHECK(dump.find("connected false") != std::string::npos);
    CHECK(dump.find("block 1 4 Zero") != std::string::npos);
    CHECK(dump.find("block 3 4 Identity") != std::string::npos);
    std::filesystem::remove(opts.dump_m);
}

TEST_CASE("compare reports the known gap exactly once") {
    mwg::cli::CommonOptions opts;
    opts.path = examples_dir() + "/ex4.json";
    std::ostringstream out, err;
    CHECK(mwg::cli::run_compare(opts, out, err) == 0);
    const std::string text = out.str();
    CHECK(text.find("known gaps: 1") != std::string::npos);
    CHECK(text.find("soundness violations: 0") != std::string::npos);
    CHECK(text.find("KNOWN GAP: oracle cluster [[1,3,4,6]]") != std::string::npos);

    opts.path = examples_dir() + "/ex1.json";
    std::ostringstream out2, err2;
    CHECK(mwg::cli::run_compare(opts, out2, err2) == 0);
    CHECK(out2.str().find("known gaps: 0") != std::string::npos);

    opts.path = examples_dir() + "/ex2.json";
    std::ostringstream out3, err3;
    CHECK(mwg::cli::run_compare(opts, out3, err3) == 0);
    CHECK(out3.str().find("known gaps: 0") != std::string::npos);
    CHECK(out3.str().find("soundness violations: 0") != std::string::npos);
}

TEST_CASE("compare flags the coarsening graph as a gap, not a violation") {
    const std::string path =
        write_temp("mwg_coarsen_test.json", serialize_graph(mwg::testing::coarsening_gap_graph()));
    mwg::cli::CommonOptions opts;
    opts.path = path;
    std::ostringstream out, err;
    CHECK(mwg::cli::run_compare(opts, out, err) == 0);
    const std::string text = out.str();
    CHECK(text.find("soundness violations: 0") != std::string::npos);
    CHECK(text.find("known gaps: 1") != std::string::npos);
    // Only the pairwise method splits this cluster; the closure keeps it.
    CHECK(text.find("brute-force keeps [[1,4],[5]]") != std::string::npos);
    CHECK(text.find("warshall keeps [[1,4,5]]") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("json reports are deterministic and carry the requested fields") {
    mwg::cli::CommonOptions opts;
    opts.path = examples_dir() + "/ex2.json";
    opts.json = true;
    std::ostringstream out1, err1, out2, err2;
    CHECK(mwg::cli::run_clusters(opts, out1, err1) == 1);
    CHECK(mwg::cli::run_clusters(opts, out2, err2) == 1);
    CHECK(out1.str() == out2.str());
    CHECK(out1.str().find("\"verdict\": \"clustering\"") != std::string::npos);
    CHECK(out1.str().find("\"clusters\"") != std::string::npos);
    CHECK(out1.str().find("\"steps\": 5") != std::string::npos);

    std::ostringstream out3, err3;
    mwg::cli::CommonOptions cmp;
    cmp.path = examples_dir() + "/ex4.json";
    cmp.json = true;
    CHECK(mwg::cli::run_compare(cmp, out3, err3) == 0);
    CHECK(out3.str().find("\"known_gaps\"") != std::string::npos);
    CHECK(out3.str().find("\"violations\": []") != std::string::npos);
}

TEST_CASE("info summarizes the graph") {
    mwg::cli::CommonOptions opts;
    opts.path = examples_dir() + "/ex3.json";
    std::ostringstream out, err;
    CHECK(mwg::cli::run_info(opts, out, err) == 0);
    const std::string text = out.str();
    CHECK(text.find("(n=4, d=2, m=3)") != std::string::npos);
    CHECK(text.find("topological components: [[1,2,3,4]]") != std::string::npos);
    CHECK(text.find("laplacian rank:") != std::string::npos);
}

TEST_CASE("tolerance overrides reach the report") {
    mwg::cli::CommonOptions opts;
    opts.path = examples_dir() + "/ex3.json";
    opts.tol_rel = 0.5;
    std::ostringstream out, err;
    mwg::cli::run_check(opts, out, err);
    CHECK(out.str().find("rel=0.5") != std::string::npos);
}

TEST_CASE("gen command round-trips through the parser") {
    mwg::cli::GenOptions gen;
    gen.n = 4;
    gen.d = 2;
    gen.seed = 7;
    std::ostringstream out, err;
    CHECK(mwg::cli::run_gen(gen, out, err) == 0);
    std::ostringstream out2, err2;
    CHECK(mwg::cli::run_gen(gen, out2, err2) == 0);
    CHECK(out.str() == out2.str());
    const auto parsed = parse_graph_text(out.str(), "gen");
    CHECK(parsed.graph.n() == 4);

    gen.rank_profile = "bogus";
    std::ostringstream out3, err3;
    CHECK_THROWS_AS(mwg::cli::run_gen(gen, out3, err3), mwg::BadParams);
}
