#include "fusion/vertex.hpp"

#include <algorithm>
#include <stdexcept>

#include "fusion/plactic.hpp"

namespace fusion {

int LatticeConfig::seam_total() const {
    int s = 0;
    for (const auto& f : moves) s += f[n - 1];
    return s;
}

std::vector<int> LatticeConfig::row_horizontal_counts() const {
    std::vector<int> out;
    out.reserve(moves.size());
    for (const auto& f : moves) {
        int s = 0;
        for (int v : f) s += v;
        out.push_back(s);
    }
    return out;
}

std::vector<int> LatticeConfig::top() const {
    std::vector<int> m = bottom;
    for (const auto& f : moves) {
        std::vector<int> next(n);
        for (int j = 0; j < n; ++j) next[j] = m[j] - f[j] + f[(j + n - 1) % n];
        m = std::move(next);
    }
    return m;
}

std::vector<std::vector<std::array<int, 4>>> LatticeConfig::quadruples() const {
    std::vector<std::vector<std::array<int, 4>>> out;
    std::vector<int> m = bottom;
    for (const auto& f : moves) {
        std::vector<std::array<int, 4>> row(n);
        std::vector<int> next(n);
        for (int j = 0; j < n; ++j) {
            int in = f[(j + n - 1) % n];
            next[j] = m[j] - f[j] + in;
            row[j] = {in, m[j], f[j], next[j]};
        }
        out.push_back(std::move(row));
        m = std::move(next);
    }
    return out;
}

namespace {

// enumerate all rows of move vectors reachable from mu; fn(config) for
// every full cylinder configuration
void enumerate_all(const std::vector<int>& mu, int n, int rows,
                   const std::function<void(const LatticeConfig&)>& fn) {
    LatticeConfig cfg;
    cfg.n = n;
    cfg.bottom = mu;
    cfg.moves.assign(rows, std::vector<int>(n, 0));

    std::vector<std::vector<int>> states(rows + 1);
    states[0] = mu;

    auto rec_row = [&](auto&& self, int row) -> void {
        if (row == rows) {
            fn(cfg);
            return;
        }
        const std::vector<int>& m = states[row];
        std::vector<int>& f = cfg.moves[row];
        auto rec_slot = [&](auto&& inner, int j) -> void {
            if (j == n) {
                std::vector<int> next(n);
                for (int t = 0; t < n; ++t) next[t] = m[t] - f[t] + f[(t + n - 1) % n];
                states[row + 1] = std::move(next);
                self(self, row + 1);
                return;
            }
            for (int v = 0; v <= m[j]; ++v) {
                f[j] = v;
                inner(inner, j + 1);
            }
            f[j] = 0;
        };
        rec_slot(rec_slot, 0);
    };
    rec_row(rec_row, 0);
}

}  // namespace

std::vector<LatticeConfig> enumerate_lattice_configs(const AffineWeight& mu,
                                                     const AffineWeight& nu,
                                                     const FusionContext& ctx) {
    if (mu.level() != ctx.k() || nu.level() != ctx.k())
        throw std::invalid_argument("enumerate_lattice_configs: boundary level mismatch");
    std::vector<LatticeConfig> out;
    enumerate_all(mu.dynkin, ctx.n(), ctx.n() - 1, [&](const LatticeConfig& cfg) {
        if (cfg.top() == nu.dynkin) out.push_back(cfg);
    });
    return out;
}

SymbolicPoly partition_function(const AffineWeight& mu, const AffineWeight& nu,
                                const FusionContext& ctx, ZBackend backend) {
    const int n = ctx.n();
    const int k = ctx.k();
    if (mu.level() != k || nu.level() != k)
        throw std::invalid_argument("partition_function: boundary level mismatch");
    SymbolicPoly z;

    if (backend == ZBackend::direct) {
        enumerate_all(mu.dynkin, n, n - 1, [&](const LatticeConfig& cfg) {
            if (cfg.top() != nu.dynkin) return;
            Monomial m;
            m.xexp = cfg.row_horizontal_counts();
            m.zdeg = cfg.seam_total();
            z.add(m, BigInt(1));
        });
        return z;
    }

    // operator route: compose Q(x_i) = sum_r x_i^r h_r(A) symbolically
    std::vector<PlacticOperator> h;
    for (int d = 0; d <= k; ++d) h.push_back(nc_poly(PolyKind::complete, d, ctx));
    std::map<int, SymbolicPoly> state;
    {
        SymbolicPoly one;
        one.add(Monomial{std::vector<int>(n - 1, 0), 0}, BigInt(1));
        state[ctx.index_of(mu)] = std::move(one);
    }
    for (int row = 0; row < n - 1; ++row) {
        std::map<int, SymbolicPoly> next;
        for (const auto& [col, poly] : state) {
            for (int r = 0; r <= k; ++r) {
                for (const auto& [target, entry] : h[r].cols[col]) {
                    for (const auto& [zdeg, coeff] : entry.coeffs()) {
                        for (const auto& [mono, pc] : poly.terms()) {
                            Monomial nm = mono;
                            nm.xexp[row] += r;
                            nm.zdeg += zdeg;
                            next[target].add(nm, pc * coeff);
                        }
                    }
                }
            }
        }
        state = std::move(next);
    }
    auto it = state.find(ctx.index_of(nu));
    return it == state.end() ? SymbolicPoly{} : it->second;
}

BigInt count_paths(const AffineWeight& mu, const AffineWeight& nu, int d,
                   const FusionContext& ctx) {
    if (d < 0) throw std::invalid_argument("count_paths: d must be nonnegative");
    BigInt count(0);
    enumerate_all(mu.dynkin, ctx.n(), ctx.n() - 1, [&](const LatticeConfig& cfg) {
        if (cfg.seam_total() == d && cfg.top() == nu.dynkin) count += BigInt(1);
    });
    return count;
}

std::vector<ZTerm> schur_expand_z(const SymbolicPoly& z, int nvars) {
    // split into z-degree layers
    std::map<int, std::map<std::vector<int>, BigInt>> layers;
    for (const auto& [m, c] : z.terms()) {
        if (static_cast<int>(m.xexp.size()) != nvars)
            throw std::invalid_argument("schur_expand_z: variable count mismatch");
        layers[m.zdeg][m.xexp] = c;
    }
    std::vector<ZTerm> out;
    for (auto& [zdeg, layer] : layers) {
        while (!layer.empty()) {
            // lexicographically largest exponent leads; for a symmetric
            // polynomial it is weakly decreasing
            auto lead = std::prev(layer.end());
            std::vector<int> alpha = lead->first;
            BigInt c = lead->second;
            for (size_t i = 0; i + 1 < alpha.size(); ++i)
                if (alpha[i] < alpha[i + 1])
                    throw std::logic_error("schur_expand_z: leading exponent not a partition");
            Partition lambda(std::vector<int>(alpha.begin(), alpha.end()));
            auto mono = schur_monomials(lambda, nvars);
            for (const auto& [exp, mult] : mono) {
                auto [it, inserted] = layer.emplace(exp, BigInt(0));
                it->second -= c * mult;
                if (it->second.is_zero()) layer.erase(it);
            }
            out.push_back(ZTerm{zdeg, lambda, c});
        }
    }
    return out;
}

}  // namespace fusion
