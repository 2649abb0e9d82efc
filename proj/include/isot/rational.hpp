#pragma once

// Arbitrary-precision signed integers and exact rationals.
//
// BigInt keeps values that fit in int64 inline and promotes to a base-2^32
// magnitude vector only when they do not. Rational is always normalized:
// denominator > 0 and gcd(|num|, den) == 1.

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isot {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) : small_(v) {}  // NOLINT(google-explicit-constructor)

    BigInt(const BigInt& o)
        : small_(o.small_),
          sign_(o.sign_),
          mag_(o.mag_ ? std::make_unique<std::vector<uint32_t>>(*o.mag_) : nullptr) {}
    BigInt(BigInt&&) noexcept = default;
    BigInt& operator=(const BigInt& o) {
        if (this != &o) {
            small_ = o.small_;
            sign_ = o.sign_;
            // reuse existing limb storage when both sides are big
            if (o.mag_) {
                if (mag_)
                    *mag_ = *o.mag_;
                else
                    mag_ = std::make_unique<std::vector<uint32_t>>(*o.mag_);
            } else {
                mag_.reset();
            }
        }
        return *this;
    }
    BigInt& operator=(BigInt&&) noexcept = default;

    static BigInt from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer literal");
        bool neg = false;
        size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            neg = (s[0] == '-');
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("sign without digits");
        BigInt acc;
        const BigInt chunk_base(1000000000LL);
        long long chunk = 0;
        int chunk_len = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("invalid digit in integer literal");
            chunk = chunk * 10 + (s[i] - '0');
            if (++chunk_len == 9) {
                acc = acc * chunk_base + BigInt(chunk);
                chunk = 0;
                chunk_len = 0;
            }
        }
        if (chunk_len > 0) {
            long long pw = 1;
            for (int j = 0; j < chunk_len; ++j) pw *= 10;
            acc = acc * BigInt(pw) + BigInt(chunk);
        }
        return neg ? acc.negated() : acc;
    }

    bool is_small() const { return mag_ == nullptr; }
    bool is_zero() const { return is_small() && small_ == 0; }
    bool is_one() const { return is_small() && small_ == 1; }
    bool odd() const { return is_small() ? (small_ & 1) != 0 : ((*mag_)[0] & 1) != 0; }

    int sign() const {
        if (is_small()) return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
        return sign_;
    }

    bool fits_ll() const { return is_small(); }
    long long to_ll() const {
        if (!is_small()) throw std::overflow_error("BigInt does not fit in long long");
        return small_;
    }

    BigInt negated() const {
        if (is_small()) {
            if (small_ != std::numeric_limits<long long>::min()) return BigInt(-small_);
            BigInt r;
            r.sign_ = 1;
            r.mag_ = std::make_unique<std::vector<uint32_t>>(std::vector<uint32_t>{0, 0x80000000u});
            r.small_ = 0;
            return r;
        }
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const { return sign() < 0 ? negated() : *this; }

    static int compare(const BigInt& a, const BigInt& b) {
        if (a.is_small() && b.is_small())
            return a.small_ < b.small_ ? -1 : (a.small_ > b.small_ ? 1 : 0);
        const int sa = a.sign(), sb = b.sign();
        if (sa != sb) return sa < sb ? -1 : 1;
        Limbs la, lb;
        const int c = cmp_mag(a.unpack(la), b.unpack(lb));
        return sa >= 0 ? c : -c;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.is_small() && b.is_small()) {
            long long r;
            if (!__builtin_add_overflow(a.small_, b.small_, &r)) return BigInt(r);
        }
        Limbs la, lb;
        const View va = a.unpack(la), vb = b.unpack(lb);
        return add_signed(a.sign(), va, b.sign(), vb);
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        if (a.is_small() && b.is_small()) {
            long long r;
            if (!__builtin_sub_overflow(a.small_, b.small_, &r)) return BigInt(r);
        }
        Limbs la, lb;
        const View va = a.unpack(la), vb = b.unpack(lb);
        return add_signed(a.sign(), va, -b.sign(), vb);
    }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_small() && b.is_small()) {
            long long r;
            if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return BigInt(r);
        }
        if (a.is_zero() || b.is_zero()) return BigInt();
        Limbs la, lb;
        const View va = a.unpack(la), vb = b.unpack(lb);
        return pack(a.sign() * b.sign(), mul_mag(va, vb));
    }

    // Truncated division (C++ semantics): q rounds toward zero, r has the
    // sign of the dividend, n == q*d + r, |r| < |d|.
    static void divrem(const BigInt& n, const BigInt& d, BigInt& q, BigInt& r) {
        if (d.is_zero()) throw std::domain_error("division by zero");
        if (n.is_small() && d.is_small()) {
            // INT64_MIN / -1 is the single small case that overflows.
            if (!(n.small_ == std::numeric_limits<long long>::min() && d.small_ == -1)) {
                q = BigInt(n.small_ / d.small_);
                r = BigInt(n.small_ % d.small_);
                return;
            }
        }
        Limbs ln, ld;
        const View vn = n.unpack(ln), vd = d.unpack(ld);
        std::vector<uint32_t> qm, rm;
        divrem_mag(vn, vd, qm, rm);
        q = pack(n.sign() * d.sign(), std::move(qm));
        r = pack(n.sign(), std::move(rm));
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divrem(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divrem(a, b, q, r);
        return r;
    }

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        if (a.is_small() && b.is_small()) {
            unsigned long long x = small_magnitude(a.small_), y = small_magnitude(b.small_);
            while (y != 0) {
                unsigned long long t = x % y;
                x = y;
                y = t;
            }
            // gcd(INT64_MIN, 0) = 2^63 does not fit; route through pack.
            return pack_u64(x);
        }
        Limbs la, lb;
        std::vector<uint32_t> ma = to_vec(a.unpack(la)), mb = to_vec(b.unpack(lb));
        return pack(1, gcd_mag(std::move(ma), std::move(mb)));
    }

    BigInt shifted_left(unsigned bits) const {
        if (is_zero() || bits == 0) return *this;
        Limbs l;
        return pack(sign(), shl_mag(unpack(l), bits));
    }

    // Number of bits in the magnitude; 0 for zero.
    size_t bit_length() const {
        if (is_small()) {
            unsigned long long m = small_magnitude(small_);
            size_t b = 0;
            while (m != 0) {
                ++b;
                m >>= 1;
            }
            return b;
        }
        return (mag_->size() - 1) * 32 + bit_width32(mag_->back());
    }

    std::string to_string() const {
        if (is_small()) return std::to_string(small_);
        std::vector<uint32_t> m = *mag_;
        std::string out;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            std::string chunk = std::to_string(rem);
            if (!m.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        if (sign_ < 0) out.insert(0, 1, '-');
        return out;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

private:
    using Limbs = uint32_t[2];
    struct View {
        const uint32_t* p;
        size_t n;
    };

    long long small_ = 0;
    signed char sign_ = 0;  // -1 or +1, meaningful only when mag_ is set
    // base 2^32 magnitude, little endian, no leading zeros; null for values
    // that fit in small_
    std::unique_ptr<std::vector<uint32_t>> mag_;

    static unsigned long long small_magnitude(long long v) {
        return v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                     : static_cast<unsigned long long>(v);
    }

    static size_t bit_width32(uint32_t v) {
        size_t b = 0;
        while (v != 0) {
            ++b;
            v >>= 1;
        }
        return b;
    }

    View unpack(Limbs& buf) const {
        if (!is_small()) return {mag_->data(), mag_->size()};
        unsigned long long m = small_magnitude(small_);
        buf[0] = static_cast<uint32_t>(m);
        buf[1] = static_cast<uint32_t>(m >> 32);
        size_t n = buf[1] != 0 ? 2 : (buf[0] != 0 ? 1 : 0);
        return {buf, n};
    }

    static std::vector<uint32_t> to_vec(View v) { return {v.p, v.p + v.n}; }

    static BigInt pack_u64(unsigned long long m) {
        if (m <= static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
            return BigInt(static_cast<long long>(m));
        BigInt r;
        r.sign_ = 1;
        r.mag_ = std::make_unique<std::vector<uint32_t>>(
            std::vector<uint32_t>{static_cast<uint32_t>(m), static_cast<uint32_t>(m >> 32)});
        return r;
    }

    static BigInt pack(int sign, std::vector<uint32_t> mag) {
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        if (mag.empty()) return BigInt();
        if (mag.size() <= 2) {
            unsigned long long m = mag[0];
            if (mag.size() == 2) m |= static_cast<unsigned long long>(mag[1]) << 32;
            if (m <= static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
                return BigInt(sign < 0 ? -static_cast<long long>(m)
                                       : static_cast<long long>(m));
            if (m == 0x8000000000000000ull && sign < 0)
                return BigInt(std::numeric_limits<long long>::min());
        }
        BigInt r;
        r.sign_ = static_cast<signed char>(sign < 0 ? -1 : 1);
        r.mag_ = std::make_unique<std::vector<uint32_t>>(std::move(mag));
        return r;
    }

    static int cmp_mag(View a, View b) {
        if (a.n != b.n) return a.n < b.n ? -1 : 1;
        for (size_t i = a.n; i-- > 0;)
            if (a.p[i] != b.p[i]) return a.p[i] < b.p[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(View a, View b) {
        if (a.n < b.n) std::swap(a, b);
        std::vector<uint32_t> r(a.n + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < a.n; ++i) {
            uint64_t s = carry + a.p[i] + (i < b.n ? b.p[i] : 0);
            r[i] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        r[a.n] = static_cast<uint32_t>(carry);
        return r;
    }

    // Requires |a| >= |b|.
    static std::vector<uint32_t> sub_mag(View a, View b) {
        std::vector<uint32_t> r(a.n, 0);
        int64_t borrow = 0;
        for (size_t i = 0; i < a.n; ++i) {
            int64_t d = static_cast<int64_t>(a.p[i]) - (i < b.n ? b.p[i] : 0) - borrow;
            borrow = d < 0 ? 1 : 0;
            r[i] = static_cast<uint32_t>(d);
        }
        assert(borrow == 0);
        return r;
    }

    static std::vector<uint32_t> mul_mag(View a, View b) {
        if (a.n == 0 || b.n == 0) return {};
        std::vector<uint32_t> r(a.n + b.n, 0);
        for (size_t i = 0; i < a.n; ++i) {
            uint64_t carry = 0;
            const uint64_t ai = a.p[i];
            for (size_t j = 0; j < b.n; ++j) {
                uint64_t cur = r[i + j] + ai * b.p[j] + carry;
                r[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r[i + b.n] = static_cast<uint32_t>(carry);
        }
        return r;
    }

    static std::vector<uint32_t> shl_mag(View a, unsigned bits) {
        if (a.n == 0) return {};
        const unsigned limb_shift = bits / 32, bit_shift = bits % 32;
        std::vector<uint32_t> r(a.n + limb_shift + 1, 0);
        for (size_t i = 0; i < a.n; ++i) {
            r[i + limb_shift] |= a.p[i] << bit_shift;
            if (bit_shift != 0)
                r[i + limb_shift + 1] |= static_cast<uint32_t>(
                    static_cast<uint64_t>(a.p[i]) >> (32 - bit_shift));
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static void shr_mag_inplace(std::vector<uint32_t>& a, unsigned bits) {
        const unsigned limb_shift = bits / 32, bit_shift = bits % 32;
        if (limb_shift >= a.size()) {
            a.clear();
            return;
        }
        if (limb_shift != 0) a.erase(a.begin(), a.begin() + limb_shift);
        if (bit_shift != 0) {
            for (size_t i = 0; i < a.size(); ++i) {
                a[i] >>= bit_shift;
                if (i + 1 < a.size())
                    a[i] |= a[i + 1] << (32 - bit_shift);
            }
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    static unsigned trailing_zero_bits(const std::vector<uint32_t>& a) {
        unsigned tz = 0;
        for (uint32_t limb : a) {
            if (limb == 0) {
                tz += 32;
                continue;
            }
            while ((limb & 1) == 0) {
                ++tz;
                limb >>= 1;
            }
            break;
        }
        return tz;
    }

    static std::vector<uint32_t> gcd_mag(std::vector<uint32_t> a, std::vector<uint32_t> b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        const unsigned za = trailing_zero_bits(a), zb = trailing_zero_bits(b);
        const unsigned shift = za < zb ? za : zb;
        shr_mag_inplace(a, za);
        for (;;) {
            shr_mag_inplace(b, trailing_zero_bits(b));
            const int c = cmp_mag({a.data(), a.size()}, {b.data(), b.size()});
            if (c == 0) break;
            if (c > 0) std::swap(a, b);
            b = sub_mag({b.data(), b.size()}, {a.data(), a.size()});
            while (!b.empty() && b.back() == 0) b.pop_back();
            if (b.empty()) break;
        }
        return shl_mag({a.data(), a.size()}, shift);
    }

    // Knuth algorithm D on normalized limbs.
    static void divrem_mag(View nv, View dv, std::vector<uint32_t>& q,
                           std::vector<uint32_t>& r) {
        q.clear();
        r.clear();
        if (cmp_mag(nv, dv) < 0) {
            r.assign(nv.p, nv.p + nv.n);
            return;
        }
        if (dv.n == 1) {
            const uint64_t d = dv.p[0];
            q.assign(nv.n, 0);
            uint64_t rem = 0;
            for (size_t i = nv.n; i-- > 0;) {
                uint64_t cur = (rem << 32) | nv.p[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            if (rem != 0) r = {static_cast<uint32_t>(rem)};
            return;
        }
        const unsigned s = 32 - static_cast<unsigned>(bit_width32(dv.p[dv.n - 1]));
        std::vector<uint32_t> vn = shl_mag(dv, s);
        std::vector<uint32_t> un = shl_mag(nv, s);
        const size_t n = vn.size();
        un.resize(nv.n + 1 > un.size() ? nv.n + 1 : un.size(), 0);
        if (un.size() < n + 1) un.resize(n + 1, 0);
        const size_t m = un.size() - 1 - n;
        q.assign(m + 1, 0);
        const uint64_t base = 1ull << 32;
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(un[j + n]) << 32) | un[j + n - 1];
            uint64_t qhat = num / vn[n - 1];
            uint64_t rhat = num % vn[n - 1];
            while (qhat >= base ||
                   qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= base) break;
            }
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * vn[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(un[i + j]) - borrow -
                            static_cast<int64_t>(p & 0xFFFFFFFFull);
                un[i + j] = static_cast<uint32_t>(t);
                borrow = t < 0 ? 1 : 0;
            }
            int64_t t = static_cast<int64_t>(un[j + n]) - borrow -
                        static_cast<int64_t>(carry);
            un[j + n] = static_cast<uint32_t>(t);
            if (t < 0) {
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s2 = static_cast<uint64_t>(un[i + j]) + vn[i] + c2;
                    un[i + j] = static_cast<uint32_t>(s2);
                    c2 = s2 >> 32;
                }
                un[j + n] = static_cast<uint32_t>(un[j + n] + c2);
            }
            q[j] = static_cast<uint32_t>(qhat);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        un.resize(n);
        shr_mag_inplace(un, s);
        r = std::move(un);
    }

    static BigInt add_signed(int sa, View va, int sb, View vb) {
        if (sa == 0) return pack(sb, to_vec(vb));
        if (sb == 0) return pack(sa, to_vec(va));
        if (sa == sb) return pack(sa, add_mag(va, vb));
        const int c = cmp_mag(va, vb);
        if (c == 0) return BigInt();
        if (c > 0) return pack(sa, sub_mag(va, vb));
        return pack(sb, sub_mag(vb, va));
    }
};

inline BigInt pow_u(const BigInt& base, unsigned exp) {
    BigInt r(1), b = base;
    while (exp != 0) {
        if (exp & 1u) r = r * b;
        b = b * b;
        exp >>= 1;
    }
    return r;
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    // Accepts "p" or "p/q" with q > 0; p may carry a sign.
    static Rational from_string(std::string_view s) {
        const size_t slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
        BigInt n = BigInt::from_string(s.substr(0, slash));
        BigInt d = BigInt::from_string(s.substr(slash + 1));
        if (d.sign() <= 0) throw std::invalid_argument("rational denominator must be positive");
        return Rational(std::move(n), std::move(d));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_.is_one() && b.den_.is_one())
            return raw(a.num_ + b.num_, BigInt(1));
        const BigInt g0 = BigInt::gcd(a.den_, b.den_);
        if (g0.is_one()) {
            return normalized_coprime_den(a.num_ * b.den_ + b.num_ * a.den_,
                                          a.den_ * b.den_);
        }
        const BigInt bd = b.den_ / g0;
        const BigInt t = a.num_ * bd + b.num_ * (a.den_ / g0);
        const BigInt g1 = BigInt::gcd(t, g0);
        return raw(t / g1, (a.den_ / g1) * bd);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    Rational operator-() const { return raw(num_.negated(), den_); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return Rational();
        const BigInt g1 = BigInt::gcd(a.num_, b.den_);
        const BigInt g2 = BigInt::gcd(b.num_, a.den_);
        return raw((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        const BigInt g1 = BigInt::gcd(a.num_, b.num_);
        const BigInt g2 = BigInt::gcd(b.den_, a.den_);
        BigInt n = (a.num_ / g1) * (b.den_ / g2);
        BigInt d = (a.den_ / g2) * (b.num_ / g1);
        if (d.sign() < 0) {
            n = n.negated();
            d = d.negated();
        }
        return raw(std::move(n), std::move(d));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    static int compare(const Rational& a, const Rational& b) {
        const int sa = a.sign(), sb = b.sign();
        if (sa != sb) return sa < sb ? -1 : 1;
        if (a.num_.fits_ll() && a.den_.fits_ll() && b.num_.fits_ll() && b.den_.fits_ll()) {
            const __int128 lhs = static_cast<__int128>(a.num_.to_ll()) * b.den_.to_ll();
            const __int128 rhs = static_cast<__int128>(b.num_.to_ll()) * a.den_.to_ll();
            return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
        }
        return BigInt::compare(a.num_ * b.den_, b.num_ * a.den_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    BigInt floor() const {
        BigInt q, r;
        BigInt::divrem(num_, den_, q, r);
        if (!r.is_zero() && num_.sign() < 0) return q - BigInt(1);
        return q;
    }

    BigInt ceil() const {
        BigInt q, r;
        BigInt::divrem(num_, den_, q, r);
        if (!r.is_zero() && num_.sign() > 0) return q + BigInt(1);
        return q;
    }

private:
    BigInt num_;
    BigInt den_;  // always > 0

    static Rational raw(BigInt n, BigInt d) {
        Rational r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        if (r.num_.is_zero()) r.den_ = BigInt(1);
        return r;
    }

    static Rational normalized_coprime_den(BigInt n, BigInt d) {
        const BigInt g = BigInt::gcd(n, d);
        if (g.is_one()) return raw(std::move(n), std::move(d));
        return raw(n / g, d / g);
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
        if (den_.sign() < 0) {
            num_ = num_.negated();
            den_ = den_.negated();
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        const BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

// Smallest integer e with x <= 2^e. Requires x > 0.
inline long long ceil_log2(const Rational& x) {
    if (x.sign() <= 0) throw std::invalid_argument("ceil_log2 requires a positive value");
    const BigInt& p = x.num();
    const BigInt& q = x.den();
    long long e = static_cast<long long>(p.bit_length()) -
                  static_cast<long long>(q.bit_length()) - 1;
    // p <= q * 2^e has a threshold within two bits of the length difference.
    auto holds = [&](long long cand) {
        if (cand >= 0) return p <= q.shifted_left(static_cast<unsigned>(cand));
        return p.shifted_left(static_cast<unsigned>(-cand)) <= q;
    };
    while (!holds(e)) ++e;
    while (e > std::numeric_limits<long long>::min() && holds(e - 1)) --e;
    return e;
}

}  // namespace isot
