#pragma once

#include "fusion/partition.hpp"
#include "fusion/symfunc.hpp"

namespace fusion {

// Fusion product expansion: partitions in the (n-1) x k box with
// nonnegative integer coefficients.
struct FusionExpansion {
    int n = 0;
    int k = 0;
    std::map<Partition, BigInt> terms;

    BigInt coeff(const Partition& p) const {
        auto it = terms.find(p);
        return it == terms.end() ? BigInt(0) : it->second;
    }

    friend bool operator==(const FusionExpansion& a, const FusionExpansion& b) {
        return a.n == b.n && a.k == b.k && a.terms == b.terms;
    }
};

// Reduces s_{rho^t} modulo the Bethe ideal: while the first part is >= n,
// rotate (rho_2, ..., rho_k, rho_1 - n) and straighten; the accumulated
// sign is the product of straightening signs.
SignedPartition reduce_bethe(const Partition& rho_t, const FusionContext& ctx);

// Fusion coefficients through the Bethe presentation: LR-expand the
// transposes, discard lengths > k, reduce each survivor, transpose back.
FusionExpansion fuse_bethe(const Partition& lambda, const Partition& mu, const FusionContext& ctx);

}  // namespace fusion
