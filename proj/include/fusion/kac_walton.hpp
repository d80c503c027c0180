#pragma once

#include "fusion/bethe_fusion.hpp"
#include "fusion/partition.hpp"

namespace fusion {

// Shifted affine Weyl reduction: brings the shifted labels of rho to the
// dominant chamber. Returns sign 0 when the orbit hits a wall, otherwise
// the dominant partition with the signature of the Weyl element.
SignedPartition dominant_representative(const Partition& rho, const FusionContext& ctx);

// Fusion coefficients via the Kac-Walton formula: signed sum of LR
// coefficients over the shifted affine Weyl orbit.
FusionExpansion fuse_kac_walton(const Partition& lambda, const Partition& mu,
                                const FusionContext& ctx);

// Removes all columns of height n (i.e. subtracts the n-th part from every
// row after padding to n rows).
Partition remove_full_columns(const Partition& rho, int n);

}  // namespace fusion
