#include "fusion/verlinde.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fusion {

namespace {

constexpr double kPi = std::numbers::pi;

// orthogonal coordinates of lambda + rho, rho = (n-1, ..., 1, 0)
std::vector<double> shifted_coords(const Partition& lambda, int n) {
    std::vector<double> a(n);
    for (int i = 0; i < n; ++i) a[i] = lambda.part(i + 1) + (n - 1 - i);
    return a;
}

}  // namespace

ComplexMatrix s_matrix(const FusionContext& ctx) {
    const int n = ctx.n();
    const int k = ctx.k();
    if (n > 6)
        throw std::domain_error("s_matrix: guarded at n <= 6 (n! sum over the Weyl group)");
    const double kappa = k + n;
    const int dim = ctx.basis_size();

    std::vector<std::vector<double>> coords(dim);
    std::vector<double> coord_sum(dim);
    for (int i = 0; i < dim; ++i) {
        coords[i] = shifted_coords(ctx.partition(i), n);
        double s = 0;
        for (double v : coords[i]) s += v;
        coord_sum[i] = s;
    }

    const cplx prefactor =
        std::polar(1.0, kPi * n * (n - 1) / 4.0) / std::sqrt(n * std::pow(kappa, n - 1));

    ComplexMatrix out(dim);
    for (int li = 0; li < dim; ++li) {
        const auto& a = coords[li];
        // collect all signed permutations of a once per row
        std::vector<std::pair<std::vector<double>, int>> perms;
        perms.reserve(1);
        for_each_permutation(n, [&](const std::vector<int>& p, int sign) {
            std::vector<double> w(n);
            for (int i = 0; i < n; ++i) w[i] = a[p[i]];
            perms.emplace_back(std::move(w), sign);
        });
        for (int si = 0; si < dim; ++si) {
            const auto& b = coords[si];
            const double cross = coord_sum[li] * coord_sum[si] / n;
            cplx sum = 0.0;
            for (const auto& [w, sign] : perms) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += b[i] * w[i];
                double inner = dot - cross;
                cplx term = std::polar(1.0, -2.0 * kPi * inner / kappa);
                sum += (sign > 0) ? term : -term;
            }
            out.at(li, si) = prefactor * sum;
        }
    }
    return out;
}

std::vector<double> quantum_dimensions(const FusionContext& ctx) {
    const int n = ctx.n();
    const double kappa = ctx.k() + n;
    std::vector<double> out;
    out.reserve(ctx.basis_size());
    for (int idx = 0; idx < ctx.basis_size(); ++idx) {
        const Partition& lambda = ctx.partition(idx);
        double prod = 1.0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                double num = lambda.part(i) - lambda.part(j) + j - i;
                double den = j - i;
                prod *= std::sin(kPi * num / kappa) / std::sin(kPi * den / kappa);
            }
        out.push_back(prod);
    }
    return out;
}

FusionExpansion fuse_verlinde(const Partition& lambda, const Partition& mu,
                              const FusionContext& ctx, const Tolerances& tol) {
    return fuse_verlinde(lambda, mu, ctx, s_matrix(ctx), tol);
}

FusionExpansion fuse_verlinde(const Partition& lambda, const Partition& mu,
                              const FusionContext& ctx, const ComplexMatrix& s,
                              const Tolerances& tol) {
    const int dim = ctx.basis_size();
    const int li = ctx.index_of(lambda);
    const int mi = ctx.index_of(mu);
    const int vac = ctx.vacuum_index();

    FusionExpansion out;
    out.n = ctx.n();
    out.k = ctx.k();
    for (int ni = 0; ni < dim; ++ni) {
        cplx acc = 0.0;
        for (int si = 0; si < dim; ++si)
            acc += s.at(li, si) * s.at(mi, si) * std::conj(s.at(ni, si)) / s.at(vac, si);
        double rounded = std::round(acc.real());
        double residual = std::max(std::abs(acc.real() - rounded), std::abs(acc.imag()));
        if (residual >= tol.verlinde_round)
            throw std::runtime_error("fuse_verlinde: rounding residual " + std::to_string(residual) +
                                     " at nu=" + ctx.partition(ni).to_string());
        long long c = static_cast<long long>(rounded);
        if (c < 0)
            throw std::runtime_error("fuse_verlinde: negative coefficient at nu=" +
                                     ctx.partition(ni).to_string());
        if (c != 0) out.terms[ctx.partition(ni)] = BigInt(c);
    }
    return out;
}

double verlinde_rounding_residual(const Partition& lambda, const Partition& mu,
                                  const FusionContext& ctx, const ComplexMatrix& s) {
    const int dim = ctx.basis_size();
    const int li = ctx.index_of(lambda);
    const int mi = ctx.index_of(mu);
    const int vac = ctx.vacuum_index();
    double worst = 0.0;
    for (int ni = 0; ni < dim; ++ni) {
        cplx acc = 0.0;
        for (int si = 0; si < dim; ++si)
            acc += s.at(li, si) * s.at(mi, si) * std::conj(s.at(ni, si)) / s.at(vac, si);
        double rounded = std::round(acc.real());
        worst = std::max({worst, std::abs(acc.real() - rounded), std::abs(acc.imag())});
    }
    return worst;
}

}  // namespace fusion
