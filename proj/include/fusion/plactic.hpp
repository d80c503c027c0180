#pragma once

#include <map>
#include <memory>
#include <vector>

#include "fusion/bethe_fusion.hpp"
#include "fusion/numeric.hpp"
#include "fusion/partition.hpp"

namespace fusion {

// Integer polynomial in the boundary parameter z: z-degree -> coefficient.
// z stays a formal grading until an explicit specialization.
class ZGradedInt {
public:
    ZGradedInt() = default;
    ZGradedInt(int degree, BigInt v) {
        if (!v.is_zero()) c_[degree] = std::move(v);
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, BigInt>& coeffs() const { return c_; }

    void add(int degree, const BigInt& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = c_.emplace(degree, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    ZGradedInt& operator+=(const ZGradedInt& o) {
        for (const auto& [d, v] : o.c_) add(d, v);
        return *this;
    }
    ZGradedInt& operator-=(const ZGradedInt& o) {
        for (const auto& [d, v] : o.c_) add(d, -v);
        return *this;
    }
    ZGradedInt times(const ZGradedInt& o) const {
        ZGradedInt r;
        for (const auto& [d1, v1] : c_)
            for (const auto& [d2, v2] : o.c_) r.add(d1 + d2, v1 * v2);
        return r;
    }
    ZGradedInt shifted(int dz) const {
        ZGradedInt r;
        for (const auto& [d, v] : c_) r.c_[d + dz] = v;
        return r;
    }
    ZGradedInt negated() const {
        ZGradedInt r;
        for (const auto& [d, v] : c_) r.c_[d] = -v;
        return r;
    }

    BigInt specialize(int z) const {  // z = 0 or 1
        BigInt acc(0);
        for (const auto& [d, v] : c_) {
            if (z == 1 || d == 0) acc += v;
        }
        return acc;
    }
    BigInt max_abs() const {
        BigInt m(0);
        for (const auto& [d, v] : c_) {
            BigInt a = v.abs();
            if (m < a) m = a;
        }
        return m;
    }

    friend bool operator==(const ZGradedInt& a, const ZGradedInt& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ZGradedInt& a, const ZGradedInt& b) { return !(a == b); }

private:
    std::map<int, BigInt> c_;
};

// Sparse endomorphism (or level-shifting map) of level subspaces, with
// z-graded integer entries. Columns are indexed by the source level basis,
// rows by the target level basis, both in context order.
struct PlacticOperator {
    int n = 0;
    int source_level = 0;
    int target_level = 0;
    int source_dim = 0;
    int target_dim = 0;
    // cols[c] : row -> entry
    std::vector<std::map<int, ZGradedInt>> cols;

    static PlacticOperator identity(const FusionContext& ctx);
    static PlacticOperator zero(const FusionContext& ctx);

    void add_entry(int row, int col, int zdeg, const BigInt& v) {
        ZGradedInt& e = cols[col][row];
        e.add(zdeg, v);
        if (e.is_zero()) cols[col].erase(row);
    }

    bool is_zero() const;
    BigInt max_abs_entry() const;

    PlacticOperator& operator+=(const PlacticOperator& o);
    PlacticOperator& operator-=(const PlacticOperator& o);
    PlacticOperator z_shifted(int dz) const;
    PlacticOperator negated() const;

    // specialization of z and application to a complex vector
    ComplexVector apply(const ComplexVector& v, int z = 1) const;

    friend bool operator==(const PlacticOperator& a, const PlacticOperator& b) {
        return a.n == b.n && a.source_level == b.source_level &&
               a.target_level == b.target_level && a.cols == b.cols;
    }
    friend bool operator!=(const PlacticOperator& a, const PlacticOperator& b) { return !(a == b); }
};

// a after b (apply b first)
PlacticOperator compose(const PlacticOperator& a, const PlacticOperator& b);

enum class GeneratorKind { phi, phi_star, number, a };
enum class PolyKind { elementary, complete };

// Matrix of the named generator on the level-k basis of ctx. phi_star
// targets level k+1, phi targets level k-1, a_i is level-preserving and
// a_n carries z-degree 1. Index i is 1-based, 1 <= i <= n.
PlacticOperator generator(GeneratorKind kind, int i, const FusionContext& ctx);

// Affine plactic elementary / complete symmetric polynomial of degree r.
PlacticOperator nc_poly(PolyKind kind, int r, const FusionContext& ctx);
// Finite (z = 0 alphabet) versions e_r(A'), h_r(A').
PlacticOperator nc_poly_finite(PolyKind kind, int r, const FusionContext& ctx);

// Affine plactic Schur polynomial: Jacobi-Trudi determinant of complete
// polynomials, expanded as a permutation sum over the (n-1) x (n-1) array.
PlacticOperator nc_schur(const Partition& lambda, const FusionContext& ctx);

// Fusion product through the operator realization: nc_schur(lambda) at
// z = 1 applied to the basis vector of mu.
FusionExpansion fuse_plactic(const Partition& lambda, const Partition& mu,
                             const FusionContext& ctx);

// Bilinear extension of the product to complex coefficient vectors.
ComplexVector star_extend(const ComplexVector& u, const ComplexVector& v,
                          const FusionContext& ctx);

// Largest absolute entry deviation of the operator functional equation,
// checked degree by degree up to cutoff (<= n + k). Zero when it holds.
BigInt functional_equation_residual(const FusionContext& ctx, int cutoff);

// Per-context cache of the affine polynomials and Schur operators.
class PlacticTable {
public:
    explicit PlacticTable(const FusionContext& ctx);

    const FusionContext& ctx() const { return ctx_; }
    const PlacticOperator& h(int r) const;  // 0 <= r <= n + k
    const PlacticOperator& e(int r) const;  // 0 <= r <= n
    const PlacticOperator& schur(int basis_idx) const;
    PlacticOperator schur_of(const Partition& lambda) const;

private:
    FusionContext ctx_;
    std::vector<PlacticOperator> h_;
    std::vector<PlacticOperator> e_;
    mutable std::vector<std::unique_ptr<PlacticOperator>> schur_;
};

}  // namespace fusion
