#pragma once

// Test-only reference implementations, kept independent of the library
// code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "fusion/bigint.hpp"
#include "fusion/partition.hpp"

namespace oracles {

using fusion::BigInt;
using fusion::Partition;

// deterministic xorshift generator for property tests
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int uniform(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline Partition random_partition(Rng& rng, int max_weight, int max_part = 10) {
    int target = rng.uniform(0, max_weight);
    std::vector<int> parts;
    int prev = std::min(max_part, target);
    while (target > 0 && prev > 0) {
        int p = rng.uniform(1, prev);
        parts.push_back(p);
        target -= p;
        prev = std::min(p, target);
    }
    return Partition(std::move(parts));
}

// Monomial polynomial in m variables: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, BigInt>;

// Schur polynomial by direct semistandard-tableau enumeration, filling
// column by column (distinct from the library's row-by-row generator).
inline Poly schur_poly(const Partition& lambda, int nvars) {
    Poly out;
    if (lambda.length() > nvars) return out;
    if (lambda.empty()) {
        out[std::vector<int>(nvars, 0)] = BigInt(1);
        return out;
    }
    Partition t = lambda.transpose();
    int cols = t.length();
    std::vector<std::vector<int>> fill(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) fill[r].assign(lambda.part(r + 1), 0);
    std::vector<int> content(nvars, 0);

    // iterate cells column-major: column c from top to bottom
    std::vector<std::pair<int, int>> cells;
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < t.part(c + 1); ++r) cells.emplace_back(r, c);

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            out[content] += BigInt(1);
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);  // strict down the column
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);      // weak along the row
        for (int v = lo; v <= nvars; ++v) {
            fill[r][c] = v;
            ++content[v - 1];
            self(self, idx + 1);
            --content[v - 1];
        }
    };
    rec(rec, 0);
    return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, inserted] = out.emplace(std::move(e), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

// Littlewood-Richardson coefficients by multiplying monomial expansions
// and peeling Schur leading terms; completely independent of the library's
// tableau-by-letter enumeration.
inline std::map<Partition, BigInt> lr_by_polynomials(const Partition& lambda,
                                                     const Partition& mu) {
    int nvars = std::max(1, lambda.length() + mu.length());
    Poly prod = poly_mul(schur_poly(lambda, nvars), schur_poly(mu, nvars));
    std::map<Partition, BigInt> out;
    while (!prod.empty()) {
        auto lead = std::prev(prod.end());  // lexicographically largest exponent
        std::vector<int> alpha = lead->first;
        BigInt c = lead->second;
        Partition shape{std::vector<int>(alpha.begin(), alpha.end())};
        Poly s = schur_poly(shape, nvars);
        for (const auto& [e, m] : s) {
            auto [it, inserted] = prod.emplace(e, BigInt(0));
            it->second -= c * m;
            if (it->second.is_zero()) prod.erase(it);
        }
        out[shape] = c;
    }
    return out;
}

// count of semistandard tableaux of a given shape with entries <= nvars
inline BigInt ssyt_count(const Partition& lambda, int nvars) {
    BigInt total(0);
    for (const auto& [e, c] : schur_poly(lambda, nvars)) total += c;
    return total;
}

// straightening by exhaustive leftmost rewriting with the two rules
// s_(..a,b..) = -s_(..b-1,a+1..) and s_(..a,a+1..) = 0
inline std::pair<int, Partition> straighten_by_rewriting(std::vector<int> alpha) {
    int sign = 1;
    for (;;) {
        bool changed = false;
        for (size_t i = 0; i + 1 < alpha.size(); ++i) {
            if (alpha[i] < alpha[i + 1]) {
                if (alpha[i + 1] == alpha[i] + 1) return {0, Partition{}};
                int a = alpha[i], b = alpha[i + 1];
                alpha[i] = b - 1;
                alpha[i + 1] = a + 1;
                sign = -sign;
                changed = true;
                break;
            }
        }
        if (!changed) break;
    }
    return {sign, Partition(std::move(alpha))};
}

}  // namespace oracles
