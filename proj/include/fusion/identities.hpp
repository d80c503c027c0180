#pragma once

#include <string>
#include <vector>

#include "fusion/bethe_fusion.hpp"
#include "fusion/partition.hpp"
#include "fusion/tolerances.hpp"

namespace fusion {

enum class StripKind { column, row };

// Level recursion: adding a column at node i leaves the fusion coefficient
// of a single-row or single-column class unchanged. Both sides computed
// through fuse_bethe.
bool check_level_recursion(int r, StripKind kind, const AffineWeight& mu, const AffineWeight& nu,
                           int i, const FusionContext& ctx);

// Closed form for N_{(1^r) mu}^{nu}, valid for 0 <= r <= n-1.
int fuse_column_closed_form(int r, const AffineWeight& mu, const AffineWeight& nu,
                            const FusionContext& ctx);

// N_{(r) mu}^{nu} for every nu, by the level-descending recursion.
FusionExpansion fuse_row_recursion(int r, const AffineWeight& mu, const FusionContext& ctx);

// skew predicates used by the closed forms
bool is_vertical_strip(const Partition& big, const Partition& small, int size);
bool is_horizontal_strip(const Partition& big, const Partition& small, int size);

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    std::string detail;
};

struct ValidationReport {
    int n = 0;
    int k = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Runs every cross-method, operator, spectral, vertex-model and recursion
// check on the given context. Failures are reported, not thrown.
ValidationReport cross_validate(const FusionContext& ctx,
                                const Tolerances& tol = default_tolerances(),
                                unsigned jobs = 1);

}  // namespace fusion
