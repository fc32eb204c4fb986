#pragma once

#include <algorithm>

namespace mwg {

// Every numeric decision in the library routes through one of these values.
// A single policy object is created at the entry point (library call or CLI
// flag parsing) and threaded through construction of all derived objects.
struct TolerancePolicy {
    // Eigenvalue zero threshold, relative to max(lambda_max, 1).
    double rel_zero = 1e-9;
    // Absolute floor for the zero threshold; also the PSD rejection margin
    // (eigenvalues below -abs_zero fail construction) and the scale of the
    // zero-matrix test.
    double abs_zero = 1e-12;
    // Mutual-containment tolerance for subspace equality in tests/reports.
    double subspace_equal = 1e-8;
    // Per-basis-vector block comparison, relative to (1 + vector norm).
    double block_equal = 1e-8;
    // Ingest warning when a weight matrix is asymmetric beyond this.
    double symmetry_warn = 1e-9;

    // Eigenvalues at or below this count as zero.
    double eigenvalue_cutoff(double lambda_max) const {
        return std::max(rel_zero * std::max(lambda_max, 1.0), abs_zero);
    }

    static const TolerancePolicy& defaults() {
        static const TolerancePolicy policy{};
        return policy;
    }
};

}  // namespace mwg
