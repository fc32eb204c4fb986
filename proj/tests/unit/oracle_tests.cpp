#include "doctest.h"
#include "mwg/oracle.hpp"
#include "support/test_graphs.hpp"

using mwg::KernelReport;
using mwg::MwGraph;
using mwg::oracle_kernel;
using mwg::oracle_partition;
using mwg::oracle_same_cluster;

TEST_CASE("kernel report dimensions are consistent") {
    const MwGraph g = mwg::testing::example_two();
    const KernelReport report = oracle_kernel(g);
    CHECK(report.n == 5);
    CHECK(report.d == 2);
    CHECK(report.basis.ambient() == 10);
    CHECK(report.basis.dim() + report.laplacian_rank == 10);
    CHECK(report.basis.dim() >= report.d);
}

TEST_CASE("connected graph: full rank short of d") {
    const MwGraph g = mwg::testing::example_one();
    const KernelReport report = oracle_kernel(g);
    CHECK(report.laplacian_rank == 24);
    const mwg::Partition p = oracle_partition(g);
    CHECK(p.single_cluster());
    CHECK(p.clusters[0] == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(p.provenance == mwg::Provenance::Oracle);
}

TEST_CASE("clustering graph partitions") {
    const mwg::Partition two = oracle_partition(mwg::testing::example_two());
    CHECK(two.clusters == std::vector<std::vector<int>>{{1, 4}, {2}, {3, 5}});

    const mwg::Partition four = oracle_partition(mwg::testing::example_four());
    CHECK(four.clusters == std::vector<std::vector<int>>{{1, 3, 4, 6}, {2}, {5}});

    const mwg::Partition gap = oracle_partition(mwg::testing::coarsening_gap_graph());
    CHECK(gap.clusters == std::vector<std::vector<int>>{{1, 4, 5}, {2}, {3}});
}

TEST_CASE("pair queries validate ids") {
    const KernelReport report = oracle_kernel(mwg::testing::example_two());
    CHECK(oracle_same_cluster(report, 1, 4));
    CHECK(oracle_same_cluster(report, 4, 1));
    CHECK_FALSE(oracle_same_cluster(report, 1, 2));
    CHECK_THROWS_AS(oracle_same_cluster(report, 0, 2), mwg::BadVertexId);
    CHECK_THROWS_AS(oracle_same_cluster(report, 1, 6), mwg::BadVertexId);
    CHECK_THROWS_AS(oracle_same_cluster(report, 3, 3), mwg::BadVertexId);
}

TEST_CASE("edgeless and single-vertex graphs") {
    const MwGraph lone = mwg::build_graph(1, 2, {});
    CHECK(oracle_partition(lone).single_cluster());
    CHECK(oracle_kernel(lone).laplacian_rank == 0);

    const MwGraph loose = mwg::build_graph(3, 2, {});
    const mwg::Partition p = oracle_partition(loose);
    CHECK(p.clusters.size() == 3);
}

TEST_CASE("positive definite weights on a connected topology give one cluster") {
    mwg::testing::Rng rng(53);
    // Path graph with PD weights is always connected.
    for (int trial = 0; trial < 5; ++trial) {
        const int n = rng.uniform_int(2, 6);
        const int d = rng.uniform_int(1, 3);
        std::vector<mwg::WeightSpec> specs;
        for (int v = 1; v < n; ++v) {
            specs.push_back({v, v + 1, rng.psd_entries(d, d) +
                                           0.1 * Eigen::MatrixXd::Identity(d, d)});
        }
        const mwg::Partition p = oracle_partition(mwg::build_graph(n, d, specs));
        CHECK(p.single_cluster());
    }
}
