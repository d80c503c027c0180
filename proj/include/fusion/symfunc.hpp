#pragma once

#include <complex>
#include <map>
#include <vector>

#include "fusion/partition.hpp"

namespace fusion {

// Finite integer-coefficient linear combination of partitions. Zero
// coefficients are never stored.
class SchurExpansion {
public:
    using Terms = std::map<Partition, BigInt>;

    SchurExpansion() = default;

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    BigInt coeff(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add(const Partition& p, const BigInt& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    SchurExpansion& operator+=(const SchurExpansion& o) {
        for (const auto& [p, c] : o.terms_) add(p, c);
        return *this;
    }
    SchurExpansion& operator*=(const BigInt& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [p, c] : terms_) c *= s;
        return *this;
    }

    friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) {
        return a.terms_ == b.terms_;
    }

private:
    Terms terms_;
};

// Result of straightening a Schur index: s_alpha = sign * s_shape, with
// sign 0 when the index collides (shape meaningless in that case).
struct SignedPartition {
    int sign = 0;
    Partition shape;
};

// s_lambda * s_mu expanded in the Schur basis; coefficients are the
// Littlewood-Richardson numbers.
SchurExpansion lr_expand(const Partition& lambda, const Partition& mu);

// Straightening in the alternant sense: sort alpha_i + (len - i), sign of
// the permutation; repeated entries give sign 0.
SignedPartition straighten(const std::vector<int>& alpha);

// Value of s_lambda at the given points. Returns 0 exactly when lambda has
// more rows than there are points. Jacobi-Trudi determinant over
// complete-symmetric evaluations, which stays exact-in-structure at
// repeated points (the all-ones case matters).
std::complex<double> schur_evaluate(const Partition& lambda,
                                    const std::vector<std::complex<double>>& points);

// Monomial expansion of s_lambda in nvars variables via semistandard
// tableau generation: exponent vector -> multiplicity.
std::map<std::vector<int>, BigInt> schur_monomials(const Partition& lambda, int nvars);

}  // namespace fusion
