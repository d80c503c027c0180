#pragma once

#include "fusion/bethe_fusion.hpp"
#include "fusion/numeric.hpp"
#include "fusion/partition.hpp"
#include "fusion/tolerances.hpp"

namespace fusion {

// Kac-Peterson modular S-matrix in the context basis order. Weights are
// embedded in n orthogonal coordinates, (a,b) = sum a_i b_i - sum(a)sum(b)/n,
// the Weyl group acting by coordinate permutations. Guarded at n <= 6.
ComplexMatrix s_matrix(const FusionContext& ctx);

// S_{lambda 0} / S_{0 0} through the positive-root product formula.
std::vector<double> quantum_dimensions(const FusionContext& ctx);

// Verlinde formula with rounding to the nearest integer; throws if any
// residual reaches tol.verlinde_round.
FusionExpansion fuse_verlinde(const Partition& lambda, const Partition& mu,
                              const FusionContext& ctx,
                              const Tolerances& tol = default_tolerances());
FusionExpansion fuse_verlinde(const Partition& lambda, const Partition& mu,
                              const FusionContext& ctx, const ComplexMatrix& s,
                              const Tolerances& tol = default_tolerances());

// Worst rounding residual of the last fuse; exposed for reporting.
double verlinde_rounding_residual(const Partition& lambda, const Partition& mu,
                                  const FusionContext& ctx, const ComplexMatrix& s);

}  // namespace fusion
