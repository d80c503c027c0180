#pragma once

#include <array>
#include <vector>

#include "fusion/partition.hpp"
#include "fusion/symfunc.hpp"

namespace fusion {

// Exact polynomial in x_1..x_{n-1} and z.
struct Monomial {
    std::vector<int> xexp;
    int zdeg = 0;

    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.zdeg != b.zdeg) return a.zdeg < b.zdeg;
        return a.xexp < b.xexp;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.zdeg == b.zdeg && a.xexp == b.xexp;
    }
};

class SymbolicPoly {
public:
    using Terms = std::map<Monomial, BigInt>;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Monomial& m, const BigInt& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    SymbolicPoly& operator+=(const SymbolicPoly& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    friend bool operator==(const SymbolicPoly& a, const SymbolicPoly& b) {
        return a.terms_ == b.terms_;
    }

    SymbolicPoly permuted_vars(const std::vector<int>& perm) const {
        SymbolicPoly out;
        for (const auto& [m, c] : terms_) {
            Monomial pm = m;
            for (size_t i = 0; i < perm.size(); ++i) pm.xexp[i] = m.xexp[perm[i]];
            out.add(pm, c);
        }
        return out;
    }

    // value at x_i = z = 1
    BigInt evaluate_all_ones() const {
        BigInt acc(0);
        for (const auto& [m, c] : terms_) acc += c;
        return acc;
    }

private:
    Terms terms_;
};

// One cylinder configuration: the bottom boundary plus, per lattice row,
// the move vector f (f[j] walkers hop from node j+1 to node j+2; the last
// slot is the seam hop from node n to node 1).
struct LatticeConfig {
    int n = 0;
    std::vector<int> bottom;                // Dynkin labels of mu
    std::vector<std::vector<int>> moves;    // n-1 rows, each of size n

    int seam_total() const;
    std::vector<int> row_horizontal_counts() const;
    std::vector<int> top() const;
    // per-vertex (a, b, c, d): a horizontal-in, b vertical-in, c
    // horizontal-out, d vertical-out; satisfies a + b = c + d and b >= c
    std::vector<std::vector<std::array<int, 4>>> quadruples() const;
};

std::vector<LatticeConfig> enumerate_lattice_configs(const AffineWeight& mu,
                                                     const AffineWeight& nu,
                                                     const FusionContext& ctx);

enum class ZBackend { direct, operator_route };

// Partition function between the bottom boundary mu and top boundary nu;
// the two backends agree exactly.
SymbolicPoly partition_function(const AffineWeight& mu, const AffineWeight& nu,
                                const FusionContext& ctx, ZBackend backend);

// Number of configurations whose seam is crossed exactly d times.
BigInt count_paths(const AffineWeight& mu, const AffineWeight& nu, int d,
                   const FusionContext& ctx);

// Schur expansion of a symmetric polynomial layer by z-degree, by greedy
// leading-monomial subtraction under lexicographic order.
struct ZTerm {
    int zdeg = 0;
    Partition lambda;
    BigInt coeff;
};
std::vector<ZTerm> schur_expand_z(const SymbolicPoly& z, int nvars);

}  // namespace fusion
