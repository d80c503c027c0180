#include "fusion/plactic.hpp"

#include <stdexcept>

namespace fusion {

PlacticOperator PlacticOperator::identity(const FusionContext& ctx) {
    PlacticOperator op;
    op.n = ctx.n();
    op.source_level = op.target_level = ctx.k();
    op.source_dim = op.target_dim = ctx.basis_size();
    op.cols.resize(op.source_dim);
    for (int c = 0; c < op.source_dim; ++c) op.cols[c][c] = ZGradedInt(0, BigInt(1));
    return op;
}

PlacticOperator PlacticOperator::zero(const FusionContext& ctx) {
    PlacticOperator op;
    op.n = ctx.n();
    op.source_level = op.target_level = ctx.k();
    op.source_dim = op.target_dim = ctx.basis_size();
    op.cols.resize(op.source_dim);
    return op;
}

bool PlacticOperator::is_zero() const {
    for (const auto& col : cols)
        if (!col.empty()) return false;
    return true;
}

BigInt PlacticOperator::max_abs_entry() const {
    BigInt m(0);
    for (const auto& col : cols)
        for (const auto& [row, e] : col) {
            BigInt a = e.max_abs();
            if (m < a) m = a;
        }
    return m;
}

PlacticOperator& PlacticOperator::operator+=(const PlacticOperator& o) {
    if (n != o.n || source_level != o.source_level || target_level != o.target_level)
        throw std::invalid_argument("PlacticOperator: level mismatch in addition");
    for (int c = 0; c < source_dim; ++c)
        for (const auto& [row, e] : o.cols[c]) {
            ZGradedInt& mine = cols[c][row];
            mine += e;
            if (mine.is_zero()) cols[c].erase(row);
        }
    return *this;
}

PlacticOperator& PlacticOperator::operator-=(const PlacticOperator& o) {
    return *this += o.negated();
}

PlacticOperator PlacticOperator::z_shifted(int dz) const {
    PlacticOperator r = *this;
    for (auto& col : r.cols)
        for (auto& [row, e] : col) e = e.shifted(dz);
    return r;
}

PlacticOperator PlacticOperator::negated() const {
    PlacticOperator r = *this;
    for (auto& col : r.cols)
        for (auto& [row, e] : col) e = e.negated();
    return r;
}

ComplexVector PlacticOperator::apply(const ComplexVector& v, int z) const {
    if (static_cast<int>(v.size()) != source_dim)
        throw std::invalid_argument("PlacticOperator: vector size mismatch");
    ComplexVector out(target_dim, 0.0);
    for (int c = 0; c < source_dim; ++c) {
        if (v[c] == cplx(0.0)) continue;
        for (const auto& [row, e] : cols[c]) out[row] += e.specialize(z).to_double() * v[c];
    }
    return out;
}

PlacticOperator compose(const PlacticOperator& a, const PlacticOperator& b) {
    if (a.n != b.n || b.target_level != a.source_level)
        throw std::invalid_argument("compose: level mismatch");
    PlacticOperator r;
    r.n = a.n;
    r.source_level = b.source_level;
    r.target_level = a.target_level;
    r.source_dim = b.source_dim;
    r.target_dim = a.target_dim;
    r.cols.resize(r.source_dim);
    for (int c = 0; c < b.source_dim; ++c) {
        for (const auto& [mid, eb] : b.cols[c]) {
            for (const auto& [row, ea] : a.cols[mid]) {
                ZGradedInt& tgt = r.cols[c][row];
                tgt += ea.times(eb);
                if (tgt.is_zero()) r.cols[c].erase(row);
            }
        }
    }
    return r;
}

namespace {

PlacticOperator make_shifting(const FusionContext& src, int target_level, int n) {
    PlacticOperator op;
    op.n = n;
    op.source_level = src.k();
    op.target_level = target_level;
    op.source_dim = src.basis_size();
    op.cols.resize(op.source_dim);
    return op;
}

}  // namespace

PlacticOperator generator(GeneratorKind kind, int i, const FusionContext& ctx) {
    const int n = ctx.n();
    if (i < 1 || i > n) throw std::out_of_range("generator: index out of range");
    const int k = ctx.k();

    switch (kind) {
        case GeneratorKind::phi_star: {
            FusionContext up(n, k + 1);
            PlacticOperator op = make_shifting(ctx, k + 1, n);
            op.target_dim = up.basis_size();
            for (int c = 0; c < ctx.basis_size(); ++c) {
                AffineWeight w = ctx.weight(c);
                ++w.dynkin[i - 1];
                op.add_entry(up.index_of(w), c, 0, BigInt(1));
            }
            return op;
        }
        case GeneratorKind::phi: {
            if (k == 0) {
                PlacticOperator op = make_shifting(ctx, -1, n);
                op.target_dim = 0;
                return op;
            }
            FusionContext down(n, k - 1);
            PlacticOperator op = make_shifting(ctx, k - 1, n);
            op.target_dim = down.basis_size();
            for (int c = 0; c < ctx.basis_size(); ++c) {
                AffineWeight w = ctx.weight(c);
                if (w.dynkin[i - 1] == 0) continue;
                --w.dynkin[i - 1];
                op.add_entry(down.index_of(w), c, 0, BigInt(1));
            }
            return op;
        }
        case GeneratorKind::number: {
            PlacticOperator op = PlacticOperator::zero(ctx);
            for (int c = 0; c < ctx.basis_size(); ++c) {
                int m = ctx.weight(c).dynkin[i - 1];
                if (m != 0) op.add_entry(c, c, 0, BigInt(m));
            }
            return op;
        }
        case GeneratorKind::a: {
            PlacticOperator op = PlacticOperator::zero(ctx);
            const int from = i - 1;
            const int to = i % n;  // a_n wraps to node 1 and carries z
            const int zdeg = (i == n) ? 1 : 0;
            for (int c = 0; c < ctx.basis_size(); ++c) {
                AffineWeight w = ctx.weight(c);
                if (w.dynkin[from] == 0) continue;
                --w.dynkin[from];
                ++w.dynkin[to];
                op.add_entry(ctx.index_of(w), c, zdeg, BigInt(1));
            }
            return op;
        }
    }
    throw std::logic_error("generator: unreachable");
}

namespace {

// enumerate compositions of r into parts slots, parts bounded by `bound`
// (-1 for unbounded); callback gets the composition
void for_each_composition(int r, int slots, int bound,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> eps(slots, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == slots - 1) {
            if (bound >= 0 && remaining > bound) return;
            eps[pos] = remaining;
            fn(eps);
            return;
        }
        int hi = (bound >= 0) ? std::min(bound, remaining) : remaining;
        for (int v = 0; v <= hi; ++v) {
            eps[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    if (slots == 0) {
        if (r == 0) fn(eps);
        return;
    }
    rec(rec, 0, r);
}

}  // namespace

static PlacticOperator nc_poly_impl(PolyKind kind, int r, const FusionContext& ctx, bool affine) {
    if (r < 0) throw std::invalid_argument("nc_poly: negative degree");
    const int n = ctx.n();
    PlacticOperator op = PlacticOperator::zero(ctx);
    if (r == 0) return PlacticOperator::identity(ctx);

    if (kind == PolyKind::complete) {
        // eps = (eps_0, eps_1, ..., eps_{n-1}); eps_0 is the affine slot
        for_each_composition(r, n, -1, [&](const std::vector<int>& eps) {
            if (!affine && eps[0] != 0) return;
            for (int c = 0; c < ctx.basis_size(); ++c) {
                std::vector<int> cur = ctx.weight(c).dynkin;
                // phi_n^{eps_0} first, then a_{n-1} ... a_1, then phi_1*^{eps_0}
                if (cur[n - 1] < eps[0]) continue;
                cur[n - 1] -= eps[0];
                bool dead = false;
                for (int j = n - 1; j >= 1; --j) {
                    if (cur[j - 1] < eps[j]) { dead = true; break; }
                    cur[j - 1] -= eps[j];
                    cur[j] += eps[j];
                }
                if (dead) continue;
                cur[0] += eps[0];
                op.add_entry(ctx.index_of(AffineWeight{cur}), c, eps[0], BigInt(1));
            }
        });
    } else {
        // eps = (eps_1, ..., eps_n) with parts 0 or 1; eps_n is the affine slot
        for_each_composition(r, n, 1, [&](const std::vector<int>& eps01) {
            // eps01[j-1] corresponds to eps_j
            const int eps_n = eps01[n - 1];
            if (!affine && eps_n != 0) return;
            for (int c = 0; c < ctx.basis_size(); ++c) {
                std::vector<int> cur = ctx.weight(c).dynkin;
                // phi_1*^{eps_n} first, then a_1 ... a_{n-1}, then phi_n^{eps_n}
                cur[0] += eps_n;
                bool dead = false;
                for (int j = 1; j <= n - 1; ++j) {
                    if (eps01[j - 1] == 0) continue;
                    if (cur[j - 1] == 0) { dead = true; break; }
                    --cur[j - 1];
                    ++cur[j];
                }
                if (dead) continue;
                if (eps_n) {
                    if (cur[n - 1] == 0) continue;
                    --cur[n - 1];
                }
                op.add_entry(ctx.index_of(AffineWeight{cur}), c, eps_n, BigInt(1));
            }
        });
    }
    return op;
}

PlacticOperator nc_poly(PolyKind kind, int r, const FusionContext& ctx) {
    return nc_poly_impl(kind, r, ctx, true);
}

PlacticOperator nc_poly_finite(PolyKind kind, int r, const FusionContext& ctx) {
    return nc_poly_impl(kind, r, ctx, false);
}

namespace {

PlacticOperator schur_from_h(const Partition& lambda, const FusionContext& ctx,
                             const std::function<const PlacticOperator&(int)>& h) {
    const int n = ctx.n();
    const int k = ctx.k();
    if (lambda.length() > n - 1)
        throw std::invalid_argument("nc_schur: partition longer than n-1");
    const int m = n - 1;
    PlacticOperator acc = PlacticOperator::zero(ctx);
    for_each_permutation(m, [&](const std::vector<int>& perm, int sign) {
        // term: product over i of h_{lambda_i - i + perm_i}
        PlacticOperator term = PlacticOperator::identity(ctx);
        bool dead = false;
        for (int i = 0; i < m; ++i) {
            int deg = lambda.part(i + 1) - (i + 1) + (perm[i] + 1);
            if (deg < 0 || deg > k) { dead = true; break; }  // h_d vanishes on level k for d > k
            if (deg == 0) continue;
            term = compose(term, h(deg));
        }
        if (dead) return;
        if (sign < 0) term = term.negated();
        acc += term;
    });
    return acc;
}

}  // namespace

PlacticOperator nc_schur(const Partition& lambda, const FusionContext& ctx) {
    std::vector<PlacticOperator> hs;
    hs.reserve(ctx.k() + 1);
    for (int d = 0; d <= ctx.k(); ++d) hs.push_back(nc_poly(PolyKind::complete, d, ctx));
    return schur_from_h(lambda, ctx,
                        [&](int d) -> const PlacticOperator& { return hs[d]; });
}

FusionExpansion fuse_plactic(const Partition& lambda, const Partition& mu,
                             const FusionContext& ctx) {
    if (!lambda.fits_box(ctx.n() - 1, ctx.k()) || !mu.fits_box(ctx.n() - 1, ctx.k()))
        throw std::invalid_argument("fuse_plactic: arguments must fit the (n-1) x k box");
    PlacticOperator s = nc_schur(lambda, ctx);
    FusionExpansion out;
    out.n = ctx.n();
    out.k = ctx.k();
    const int c = ctx.index_of(mu);
    for (const auto& [row, e] : s.cols[c]) {
        BigInt v = e.specialize(1);
        if (v.is_zero()) continue;
        if (v.is_negative())
            throw std::logic_error("fuse_plactic: negative coefficient at " +
                                   ctx.partition(row).to_string());
        out.terms[ctx.partition(row)] = v;
    }
    return out;
}

ComplexVector star_extend(const ComplexVector& u, const ComplexVector& v,
                          const FusionContext& ctx) {
    if (static_cast<int>(u.size()) != ctx.basis_size() ||
        static_cast<int>(v.size()) != ctx.basis_size())
        throw std::invalid_argument("star_extend: vector size mismatch");
    PlacticTable table(ctx);
    ComplexVector out(ctx.basis_size(), 0.0);
    for (int li = 0; li < ctx.basis_size(); ++li) {
        if (u[li] == cplx(0.0)) continue;
        ComplexVector w = table.schur(li).apply(v, 1);
        for (int i = 0; i < ctx.basis_size(); ++i) out[i] += u[li] * w[i];
    }
    return out;
}

BigInt functional_equation_residual(const FusionContext& ctx, int cutoff) {
    const int n = ctx.n();
    const int k = ctx.k();
    if (cutoff > n + k)
        throw std::invalid_argument("functional_equation_residual: cutoff beyond n + k");
    std::vector<PlacticOperator> h, e;
    for (int d = 0; d <= cutoff; ++d) h.push_back(nc_poly(PolyKind::complete, d, ctx));
    for (int d = 0; d <= std::min(cutoff, n); ++d) e.push_back(nc_poly(PolyKind::elementary, d, ctx));

    BigInt worst(0);
    for (int r = 0; r <= cutoff; ++r) {
        PlacticOperator lhs = PlacticOperator::zero(ctx);
        for (int a = 0; a <= std::min(r, n); ++a) {
            PlacticOperator term = compose(e[a], h[r - a]);
            if (a % 2 == 1) term = term.negated();
            lhs += term;
        }
        if (r == 0) {
            lhs -= PlacticOperator::identity(ctx);
        } else if (r == n + k) {
            PlacticOperator rhs = h[k].z_shifted(1);
            if (n % 2 == 1) rhs = rhs.negated();
            lhs -= rhs;
        }
        BigInt m = lhs.max_abs_entry();
        if (worst < m) worst = m;
    }
    return worst;
}

PlacticTable::PlacticTable(const FusionContext& ctx) : ctx_(ctx) {
    const int n = ctx_.n();
    const int k = ctx_.k();
    for (int d = 0; d <= n + k; ++d) h_.push_back(nc_poly(PolyKind::complete, d, ctx_));
    for (int d = 0; d <= n; ++d) e_.push_back(nc_poly(PolyKind::elementary, d, ctx_));
    schur_.resize(ctx_.basis_size());
}

const PlacticOperator& PlacticTable::h(int r) const {
    if (r < 0 || r > static_cast<int>(h_.size()) - 1)
        throw std::out_of_range("PlacticTable: h degree out of range");
    return h_[r];
}

const PlacticOperator& PlacticTable::e(int r) const {
    if (r < 0 || r > static_cast<int>(e_.size()) - 1)
        throw std::out_of_range("PlacticTable: e degree out of range");
    return e_[r];
}

const PlacticOperator& PlacticTable::schur(int basis_idx) const {
    auto& slot = schur_[basis_idx];
    if (!slot) {
        slot = std::make_unique<PlacticOperator>(
            schur_from_h(ctx_.partition(basis_idx), ctx_,
                         [&](int d) -> const PlacticOperator& { return h_[d]; }));
    }
    return *slot;
}

PlacticOperator PlacticTable::schur_of(const Partition& lambda) const {
    return schur_from_h(lambda, ctx_,
                        [&](int d) -> const PlacticOperator& { return h_[d]; });
}

}  // namespace fusion
