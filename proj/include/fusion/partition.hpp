#pragma once

#include <map>
#include <string>
#include <vector>

#include "fusion/bigint.hpp"

namespace fusion {

// Integer partition in canonical form: weakly decreasing positive parts,
// no trailing zeros. Immutable after construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& s);  // "3,1"; "0" or "" is empty

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    // part(i) is 0 beyond the stored length; i is 1-based
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    Partition transpose() const;
    bool fits_box(int rows, int cols) const { return length() <= rows && part(1) <= cols; }
    bool contains(const Partition& mu) const;

    std::string to_string() const;  // "3,1"; empty partition prints "0"

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    // order: by weight, then lexicographically on the part lists
    friend bool operator<(const Partition& a, const Partition& b) {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
};

// Affine weight of su(n)^ at some level: n nonnegative Dynkin labels.
struct AffineWeight {
    std::vector<int> dynkin;

    int level() const;
    std::string to_string() const;  // "[1,2,1]"
    static AffineWeight parse(const std::string& s);

    friend bool operator==(const AffineWeight& a, const AffineWeight& b) { return a.dynkin == b.dynkin; }
    friend bool operator!=(const AffineWeight& a, const AffineWeight& b) { return !(a == b); }
};

// The pair (n, k) together with the enumerated level-k weight basis.
// Basis order: colexicographic on Dynkin tuples.
class FusionContext {
public:
    FusionContext(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<AffineWeight>& basis() const { return basis_; }
    int basis_size() const { return static_cast<int>(basis_.size()); }

    const AffineWeight& weight(int idx) const { return basis_[idx]; }
    const Partition& partition(int idx) const { return partitions_[idx]; }
    int index_of(const AffineWeight& w) const;
    int index_of(const Partition& lambda) const;
    int vacuum_index() const { return vacuum_; }

private:
    int n_;
    int k_;
    std::vector<AffineWeight> basis_;
    std::vector<Partition> partitions_;
    std::map<std::vector<int>, int> lookup_;
    int vacuum_ = -1;
};

Partition weight_to_partition(const AffineWeight& w, const FusionContext& ctx);
AffineWeight partition_to_weight(const Partition& lambda, const FusionContext& ctx);
Partition transpose(const Partition& lambda);
Partition dual_weight(const Partition& lambda, const FusionContext& ctx);
Rational hook_content_product(const Partition& lambda, int n);
std::vector<AffineWeight> enumerate_level(const FusionContext& ctx);

BigInt binomial(int n, int k);

}  // namespace fusion
