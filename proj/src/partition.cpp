#include "fusion/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fusion {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw std::invalid_argument("Partition: parts must be weakly decreasing and positive");
    }
}

Partition Partition::parse(const std::string& s) {
    if (s.empty() || s == "0") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("Partition: bad token '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
    std::vector<int> t;
    for (int j = 1; j <= part(1); ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        t.push_back(count);
    }
    return Partition(std::move(t));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (part(i) < mu.part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int AffineWeight::level() const {
    return std::accumulate(dynkin.begin(), dynkin.end(), 0);
}

std::string AffineWeight::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < dynkin.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(dynkin[i]);
    }
    return out + "]";
}

AffineWeight AffineWeight::parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("AffineWeight: expected bracketed tuple, got '" + s + "'");
    AffineWeight w;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = std::stoi(tok);
        if (v < 0) throw std::invalid_argument("AffineWeight: negative Dynkin label");
        w.dynkin.push_back(v);
    }
    return w;
}

namespace {

// all weak compositions of k into n parts, colex order on the tuples
void enumerate_colex(int n, int k, std::vector<AffineWeight>& out) {
    std::vector<int> m(n, 0);
    // recurse from the last coordinate down so that the output is sorted
    // by (m_n, m_{n-1}, ..., m_1), i.e. colexicographically
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == 0) {
            m[0] = remaining;
            out.push_back(AffineWeight{m});
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            m[pos] = v;
            self(self, pos - 1, remaining - v);
        }
    };
    rec(rec, n - 1, k);
}

}  // namespace

FusionContext::FusionContext(int n, int k) : n_(n), k_(k) {
    if (n < 2) throw std::invalid_argument("FusionContext: n must be >= 2");
    if (k < 0) throw std::invalid_argument("FusionContext: k must be >= 0");
    enumerate_colex(n, k, basis_);
    partitions_.reserve(basis_.size());
    for (size_t i = 0; i < basis_.size(); ++i) {
        lookup_[basis_[i].dynkin] = static_cast<int>(i);
        partitions_.push_back(weight_to_partition(basis_[i], *this));
        if (partitions_.back().empty()) vacuum_ = static_cast<int>(i);
    }
}

int FusionContext::index_of(const AffineWeight& w) const {
    auto it = lookup_.find(w.dynkin);
    if (it == lookup_.end()) throw std::invalid_argument("FusionContext: weight not at this level");
    return it->second;
}

int FusionContext::index_of(const Partition& lambda) const {
    return index_of(partition_to_weight(lambda, *this));
}

Partition weight_to_partition(const AffineWeight& w, const FusionContext& ctx) {
    int n = ctx.n();
    if (static_cast<int>(w.dynkin.size()) != n || w.level() != ctx.k())
        throw std::invalid_argument("weight_to_partition: weight not valid in context");
    // lambda_i = m_i + m_{i+1} + ... + m_{n-1}
    std::vector<int> lambda(n - 1, 0);
    int acc = 0;
    for (int i = n - 1; i >= 1; --i) {
        acc += w.dynkin[i - 1];
        lambda[i - 1] = acc;
    }
    return Partition(std::move(lambda));
}

AffineWeight partition_to_weight(const Partition& lambda, const FusionContext& ctx) {
    int n = ctx.n();
    int k = ctx.k();
    if (!lambda.fits_box(n - 1, k))
        throw std::invalid_argument("partition_to_weight: partition " + lambda.to_string() +
                                    " does not fit the (n-1) x k box for n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k));
    AffineWeight w;
    w.dynkin.resize(n);
    for (int i = 1; i < n; ++i) w.dynkin[i - 1] = lambda.part(i) - lambda.part(i + 1);
    w.dynkin[n - 1] = k - lambda.part(1);
    return w;
}

Partition transpose(const Partition& lambda) { return lambda.transpose(); }

Partition dual_weight(const Partition& lambda, const FusionContext& ctx) {
    int n = ctx.n();
    if (!lambda.fits_box(n - 1, ctx.k()))
        throw std::invalid_argument("dual_weight: partition outside the bounding box");
    if (lambda.empty()) return lambda;
    std::vector<int> dual;
    dual.push_back(lambda.part(1));
    for (int i = n - 1; i >= 2; --i) dual.push_back(lambda.part(1) - lambda.part(i));
    return Partition(std::move(dual));
}

Rational hook_content_product(const Partition& lambda, int n) {
    if (n < 2) throw std::invalid_argument("hook_content_product: n must be >= 2");
    Partition t = lambda.transpose();
    Rational result(1);
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            int content = j - i;
            int hook = lambda.part(i) + t.part(j) - i - j + 1;
            result *= Rational(BigInt(n - 1 + content), BigInt(hook));
        }
    }
    return result;
}

std::vector<AffineWeight> enumerate_level(const FusionContext& ctx) { return ctx.basis(); }

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt num(1);
    BigInt den(1);
    for (int i = 0; i < k; ++i) {
        num *= BigInt(n - i);
        den *= BigInt(i + 1);
    }
    Rational r(num, den);
    return r.num();
}

}  // namespace fusion
