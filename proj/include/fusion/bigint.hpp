#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusion {

// Arbitrary-precision signed integer, little-endian base 2^32 magnitude.
// Supports the arithmetic needed by the exact layers: add, sub, mul,
// comparison, small division (for decimal output) and binary gcd.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {  // NOLINT: intentionally implicit
        if (v < 0) { sign_ = -1; }
        else if (v > 0) { sign_ = 1; }
        unsigned long long u = (v < 0) ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
        while (u) { mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu)); u >>= 32; }
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) {
        if (o.sign_ == 0) return *this;
        if (sign_ == 0) { *this = o; return *this; }
        if (sign_ == o.sign_) {
            add_mag(mag_, o.mag_);
            return *this;
        }
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) { sign_ = 0; mag_.clear(); return *this; }
        if (c > 0) {
            sub_mag(mag_, o.mag_);
        } else {
            std::vector<std::uint32_t> m = o.mag_;
            sub_mag(m, mag_);
            mag_ = std::move(m);
            sign_ = o.sign_;
        }
        return *this;
    }
    BigInt& operator-=(const BigInt& o) { return *this += -o; }
    friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
    friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j]
                                    + r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            size_t pos = i + b.mag_.size();
            while (carry) {
                std::uint64_t cur = r.mag_[pos] + carry;
                r.mag_[pos] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++pos;
            }
        }
        r.trim();
        return r;
    }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Quotient and remainder by a small positive divisor.
    std::uint32_t divmod_small(std::uint32_t d) {
        if (d == 0) throw std::domain_error("BigInt: division by zero");
        std::uint64_t rem = 0;
        for (size_t i = mag_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag_[i];
            mag_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        if (mag_.empty()) sign_ = 0;
        return static_cast<std::uint32_t>(rem);
    }

    bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

    BigInt& shift_right1() {
        std::uint32_t carry = 0;
        for (size_t i = mag_.size(); i-- > 0;) {
            std::uint32_t next = mag_[i] & 1u;
            mag_[i] = (mag_[i] >> 1) | (carry << 31);
            carry = next;
        }
        trim();
        if (mag_.empty()) sign_ = 0;
        return *this;
    }
    BigInt& shift_left1() {
        if (sign_ == 0) return *this;
        std::uint32_t carry = 0;
        for (auto& w : mag_) {
            std::uint32_t next = w >> 31;
            w = (w << 1) | carry;
            carry = next;
        }
        if (carry) mag_.push_back(carry);
        return *this;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    // Binary gcd of |a| and |b|.
    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int shift = 0;
        while (a.is_even() && b.is_even()) { a.shift_right1(); b.shift_right1(); ++shift; }
        while (a.is_even()) a.shift_right1();
        while (!b.is_zero()) {
            while (b.is_even()) b.shift_right1();
            if (cmp_mag(a.mag_, b.mag_) > 0) std::swap(a, b);
            b -= a;
        }
        for (int i = 0; i < shift; ++i) a.shift_left1();
        return a;
    }

    long long to_long_long() const {
        if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in long long");
        unsigned long long u = 0;
        for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
        if (sign_ >= 0) {
            if (u > 0x7fffffffffffffffull) throw std::overflow_error("BigInt: does not fit in long long");
            return static_cast<long long>(u);
        }
        if (u > 0x8000000000000000ull) throw std::overflow_error("BigInt: does not fit in long long");
        return -static_cast<long long>(u - 1) - 1;
    }

    double to_double() const {
        double v = 0;
        for (size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
        return sign_ < 0 ? -v : v;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string out;
        BigInt t = abs();
        while (!t.is_zero()) {
            std::uint32_t r = t.divmod_small(1000000000u);
            std::string chunk = std::to_string(r);
            if (!t.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        if (sign_ < 0) out.insert(0, 1, '-');
        return out;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static void add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        std::uint64_t carry = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            std::uint64_t cur = carry + a[i] + (i < b.size() ? b[i] : 0);
            a[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) a.push_back(static_cast<std::uint32_t>(carry));
    }

    // requires |a| >= |b|
    static void sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) { cur += (1ll << 32); borrow = 1; }
            else { borrow = 0; }
            a[i] = static_cast<std::uint32_t>(cur);
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
};

// Exact rational built on BigInt; denominator kept positive and reduced.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
    Rational(long long n) : num_(n), den_(1) {}          // NOLINT
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_integer() const { return den_ == BigInt(1); }
    bool is_zero() const { return num_.is_zero(); }

    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }

private:
    BigInt num_;
    BigInt den_;

    void normalize() {
        if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
    }

    // exact division by repeated subtraction in base-2 long division
    static BigInt div_exact(const BigInt& a, const BigInt& b) {
        // binary long division; b > 0, result exact by construction of gcd
        BigInt rem = a.abs();
        BigInt q(0);
        if (rem < b) return q;
        std::vector<BigInt> shifted{b};
        std::vector<BigInt> powers{BigInt(1)};
        while (shifted.back() <= rem) {
            BigInt s = shifted.back();
            s.shift_left1();
            BigInt p = powers.back();
            p.shift_left1();
            shifted.push_back(s);
            powers.push_back(p);
        }
        for (size_t i = shifted.size(); i-- > 0;) {
            if (shifted[i] <= rem) {
                rem -= shifted[i];
                q += powers[i];
            }
        }
        if (a.is_negative()) q = -q;
        return q;
    }
};

}  // namespace fusion
