#include "fusion/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fusion/symfunc.hpp"
#include "fusion/verlinde.hpp"

namespace fusion {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

BetheRoots bethe_roots(const Partition& sigma, const FusionContext& ctx) {
    const int n = ctx.n();
    const int k = ctx.k();
    if (!sigma.fits_box(n - 1, k))
        throw std::invalid_argument("bethe_roots: sigma outside the (n-1) x k box");
    Partition st = sigma.transpose();
    BetheRoots out;
    out.sigma = sigma;
    out.roots.reserve(k);
    const double kappa = k + n;
    const double shift = static_cast<double>(sigma.weight()) / n;
    for (int j = 1; j <= k; ++j) {
        // I_j = (k+1)/2 + sigma^t_{k+1-j} - (k+1-j)
        double ij = 0.5 * (k + 1) + st.part(k + 1 - j) - (k + 1 - j);
        out.roots.push_back(std::polar(1.0, 2.0 * kPi * (shift + ij) / kappa));
    }
    double res = bae_residual(out.roots, ctx);
    if (res > default_tolerances().bae)
        throw std::logic_error("bethe_roots: BAE residual " + std::to_string(res));
    return out;
}

double bae_residual(const std::vector<cplx>& roots, const FusionContext& ctx) {
    const int k = static_cast<int>(roots.size());
    if (k == 0) return 0.0;
    const int nk = ctx.n() + ctx.k();
    cplx prod = 1.0;
    for (const auto& x : roots) prod *= x;
    if (k % 2 == 0) prod = -prod;  // (-1)^{k-1}
    double worst = 0.0;
    for (const auto& x : roots) worst = std::max(worst, std::abs(std::pow(x, nk) - prod));
    return worst;
}

namespace {

// B(u) = u A(u) phi_1^*, A(u) = sum_r u^r e_r(A') on the target level.
// Applies B at the point u to a vector on `level`, producing level + 1.
ComplexVector apply_b(const ComplexVector& v, cplx u, int level, const FusionContext& base) {
    const int n = base.n();
    FusionContext src(n, level);
    FusionContext dst(n, level + 1);
    PlacticOperator up = generator(GeneratorKind::phi_star, 1, src);
    ComplexVector w = up.apply(v, 1);
    ComplexVector out(dst.basis_size(), 0.0);
    cplx upow = u;  // overall factor u
    for (int r = 0; r <= n - 1; ++r) {
        PlacticOperator er = nc_poly_finite(PolyKind::elementary, r, dst);
        ComplexVector part = er.apply(w, 1);
        for (int i = 0; i < dst.basis_size(); ++i) out[i] += upow * part[i];
        upow *= u;
    }
    return out;
}

}  // namespace

ComplexVector bethe_vector(const Partition& sigma, const FusionContext& ctx,
                           BetheVectorMethod method) {
    const int k = ctx.k();
    if (method == BetheVectorMethod::s_matrix) {
        ComplexMatrix s = s_matrix(ctx);
        const int si = ctx.index_of(sigma);
        const int vac = ctx.vacuum_index();
        ComplexVector out(ctx.basis_size());
        for (int li = 0; li < ctx.basis_size(); ++li)
            out[li] = std::conj(s.at(li, si)) / s.at(vac, si);
        return out;
    }

    BetheRoots br = bethe_roots(sigma, ctx);
    ComplexVector v{1.0};  // level-0 vacuum
    for (int j = k - 1; j >= 0; --j) v = apply_b(v, std::conj(br.roots[j]), k - 1 - j, ctx);
    // fix the phase: vacuum component real positive
    cplx vac = v[ctx.vacuum_index()];
    if (std::abs(vac) > 1e-14) {
        cplx phase = vac / std::abs(vac);
        for (auto& x : v) x /= phase;
    }
    return v;
}

ComplexVector bethe_idempotent(const Partition& sigma, const FusionContext& ctx) {
    ComplexVector b = bethe_vector(sigma, ctx, BetheVectorMethod::s_matrix);
    double nsq = 0.0;
    for (const auto& x : b) nsq += std::norm(x);
    for (auto& x : b) x /= nsq;
    return b;
}

double eigen_check(const Partition& sigma, int r, PolyKind kind, const FusionContext& ctx) {
    const int n = ctx.n();
    const int k = ctx.k();
    PlacticOperator op = nc_poly(kind, r, ctx);
    ComplexVector b = bethe_vector(sigma, ctx, BetheVectorMethod::s_matrix);

    // reference eigenvalue: S_{rho sigma} / S_{0 sigma} with rho = (r) for
    // complete and (1^r) for elementary; beyond the box via the Schur value
    // at the Bethe roots
    Partition rho = (kind == PolyKind::complete)
                        ? Partition(std::vector<int>{r == 0 ? 0 : r})
                        : Partition(std::vector<int>(r, 1));
    cplx ref;
    if (rho.fits_box(n - 1, k)) {
        ComplexMatrix s = s_matrix(ctx);
        ref = s.at(ctx.index_of(rho), ctx.index_of(sigma)) /
              s.at(ctx.vacuum_index(), ctx.index_of(sigma));
    } else {
        BetheRoots br = bethe_roots(sigma, ctx);
        ref = schur_evaluate(rho.transpose(), br.roots);
    }

    ComplexVector lhs = op.apply(b, 1);
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < b.size(); ++i) {
        num += std::norm(lhs[i] - ref * b[i]);
        den += std::norm(b[i]);
    }
    return std::sqrt(num / den);
}

ComplexMatrix s_matrix_from_bethe(const FusionContext& ctx) {
    const int dim = ctx.basis_size();
    ComplexMatrix out(dim);
    for (int si = 0; si < dim; ++si) {
        ComplexVector b = bethe_vector(ctx.partition(si), ctx, BetheVectorMethod::b_operator);
        double norm = norm2(b);
        for (int li = 0; li < dim; ++li) out.at(li, si) = std::conj(b[li]) / norm;
    }
    return out;
}

}  // namespace fusion
