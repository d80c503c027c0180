#include "fusion/kac_walton.hpp"

#include <stdexcept>

namespace fusion {

Partition remove_full_columns(const Partition& rho, int n) {
    int cut = rho.part(n);
    if (cut == 0) return rho;
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i)
        if (rho.part(i) - cut > 0) parts.push_back(rho.part(i) - cut);
    return Partition(std::move(parts));
}

SignedPartition dominant_representative(const Partition& rho, const FusionContext& ctx) {
    const int n = ctx.n();
    const int k = ctx.k();
    if (rho.length() > n)
        throw std::invalid_argument("dominant_representative: partition longer than n");
    Partition reduced = remove_full_columns(rho, n);

    // shifted labels: l_i = m_i + 1 including the affine one, sum = n + k
    std::vector<long long> l(n);
    for (int i = 1; i < n; ++i) l[i - 1] = reduced.part(i) - reduced.part(i + 1) + 1;
    l[n - 1] = k - reduced.part(1) + 1;

    int sign = 1;
    long long guard = 0;
    // generous bound: each reflection strictly increases the number of
    // labels seen dominant eventually; the orbit is finite
    const long long max_steps = 16LL * (n + k) * (n + k) + 64;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < n; ++i) {
            if (l[i] == 0) return SignedPartition{0, Partition{}};
            if (l[i] < 0 && neg < 0) neg = i;
        }
        if (neg < 0) break;
        if (++guard > max_steps)
            throw std::logic_error("dominant_representative: reflection loop exceeded bound");
        long long v = l[neg];
        l[neg] = -v;
        l[(neg + 1) % n] += v;
        l[(neg + n - 1) % n] += v;
        sign = -sign;
    }

    // labels are now all >= 1; recover the dominant partition
    std::vector<int> parts(n - 1, 0);
    long long acc = 0;
    for (int i = n - 1; i >= 1; --i) {
        acc += l[i - 1] - 1;
        parts[i - 1] = static_cast<int>(acc);
    }
    return SignedPartition{sign, Partition(std::move(parts))};
}

FusionExpansion fuse_kac_walton(const Partition& lambda, const Partition& mu,
                                const FusionContext& ctx) {
    const int n = ctx.n();
    const int k = ctx.k();
    if (!lambda.fits_box(n - 1, k) || !mu.fits_box(n - 1, k))
        throw std::invalid_argument("fuse_kac_walton: arguments must fit the (n-1) x k box");

    SchurExpansion lr = lr_expand(lambda, mu);
    FusionExpansion out;
    out.n = n;
    out.k = k;
    for (const auto& [rho, c] : lr.terms()) {
        if (rho.length() > n) continue;
        SignedPartition dom = dominant_representative(rho, ctx);
        if (dom.sign == 0) continue;
        BigInt signed_c = (dom.sign > 0) ? c : -c;
        auto [it, inserted] = out.terms.emplace(dom.shape, signed_c);
        if (!inserted) {
            it->second += signed_c;
            if (it->second.is_zero()) out.terms.erase(it);
        }
    }
    for (const auto& [nu, c] : out.terms) {
        if (c.is_negative())
            throw std::logic_error("fuse_kac_walton: negative accumulated coefficient at " +
                                   nu.to_string());
    }
    return out;
}

}  // namespace fusion
