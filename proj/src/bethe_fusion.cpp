#include "fusion/bethe_fusion.hpp"

#include <stdexcept>

namespace fusion {

SignedPartition reduce_bethe(const Partition& rho_t, const FusionContext& ctx) {
    const int n = ctx.n();
    const int k = ctx.k();
    if (rho_t.length() > k)
        throw std::invalid_argument("reduce_bethe: partition longer than the level");

    int sign = 1;
    Partition cur = rho_t;
    int steps = 0;
    const int max_steps = rho_t.weight() + 1;
    while (cur.part(1) >= n) {
        if (++steps > max_steps)
            throw std::logic_error("reduce_bethe: rotation failed to terminate");
        std::vector<int> rotated(k);
        for (int i = 1; i < k; ++i) rotated[i - 1] = cur.part(i + 1);
        if (k > 0) rotated[k - 1] = cur.part(1) - n;
        SignedPartition s = straighten(rotated);
        if (s.sign == 0) return SignedPartition{0, Partition{}};
        sign *= s.sign;
        cur = s.shape;
    }
    return SignedPartition{sign, cur};
}

FusionExpansion fuse_bethe(const Partition& lambda, const Partition& mu, const FusionContext& ctx) {
    const int n = ctx.n();
    const int k = ctx.k();
    if (!lambda.fits_box(n - 1, k) || !mu.fits_box(n - 1, k))
        throw std::invalid_argument("fuse_bethe: arguments must fit the (n-1) x k box");

    SchurExpansion lr = lr_expand(lambda.transpose(), mu.transpose());
    FusionExpansion out;
    out.n = n;
    out.k = k;
    for (const auto& [rho_t, c] : lr.terms()) {
        if (rho_t.length() > k) continue;
        SignedPartition reduced = reduce_bethe(rho_t, ctx);
        if (reduced.sign == 0) continue;
        Partition nu = reduced.shape.transpose();
        BigInt signed_c = (reduced.sign > 0) ? c : -c;
        auto [it, inserted] = out.terms.emplace(nu, signed_c);
        if (!inserted) {
            it->second += signed_c;
            if (it->second.is_zero()) out.terms.erase(it);
        }
    }
    for (const auto& [nu, c] : out.terms) {
        if (c.is_negative())
            throw std::logic_error("fuse_bethe: negative collected coefficient at " + nu.to_string());
    }
    return out;
}

}  // namespace fusion
