#include "ym2d/bigint.hpp"

#include <cassert>
#include <cmath>

namespace ym2d {

BigNat::BigNat(std::uint64_t v) {
    if (v != 0) limbs_.push_back(v);
}

void BigNat::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigNat::cmp(const BigNat& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigNat BigNat::add(const BigNat& a, const BigNat& b) {
    BigNat r;
    const auto &x = a.limbs_, &y = b.limbs_;
    std::size_t n = std::max(x.size(), y.size());
    r.limbs_.resize(n, 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        unsigned __int128 s = carry;
        if (i < x.size()) s += x[i];
        if (i < y.size()) s += y[i];
        r.limbs_[i] = static_cast<std::uint64_t>(s);
        carry = s >> 64;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint64_t>(carry));
    return r;
}

BigNat BigNat::sub(const BigNat& a, const BigNat& b) {
    assert(a.cmp(b) >= 0);
    BigNat r;
    r.limbs_ = a.limbs_;
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        unsigned __int128 need = borrow;
        if (i < b.limbs_.size()) need += b.limbs_[i];
        if (r.limbs_[i] >= need) {
            r.limbs_[i] -= static_cast<std::uint64_t>(need);
            borrow = 0;
        } else {
            unsigned __int128 v = (static_cast<unsigned __int128>(1) << 64) + r.limbs_[i] - need;
            r.limbs_[i] = static_cast<std::uint64_t>(v);
            borrow = 1;
        }
    }
    r.normalize();
    return r;
}

BigNat BigNat::mul(const BigNat& a, const BigNat& b) {
    if (a.is_zero() || b.is_zero()) return BigNat();
    BigNat r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        unsigned __int128 carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            unsigned __int128 cur = static_cast<unsigned __int128>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        std::size_t pos = i + b.limbs_.size();
        while (carry) {
            unsigned __int128 cur = static_cast<unsigned __int128>(r.limbs_[pos]) + carry;
            r.limbs_[pos] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
            ++pos;
        }
    }
    r.normalize();
    return r;
}

BigNat BigNat::mul_small(std::uint64_t m) const {
    if (m == 0 || is_zero()) return BigNat();
    BigNat r;
    r.limbs_.resize(limbs_.size(), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 cur = static_cast<unsigned __int128>(limbs_[i]) * m + carry;
        r.limbs_[i] = static_cast<std::uint64_t>(cur);
        carry = cur >> 64;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint64_t>(carry));
    return r;
}

BigNat BigNat::half() const {
    assert(is_even());
    BigNat r;
    r.limbs_ = limbs_;
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        r.limbs_[i] >>= 1;
        if (i + 1 < r.limbs_.size() && (r.limbs_[i + 1] & 1u))
            r.limbs_[i] |= (std::uint64_t(1) << 63);
    }
    r.normalize();
    return r;
}

BigNat BigNat::shl(unsigned bits) const {
    if (is_zero() || bits == 0) {
        BigNat r = *this;
        return r;
    }
    BigNat r;
    unsigned limb_shift = bits / 64;
    unsigned bit_shift = bits % 64;
    r.limbs_.assign(limb_shift, 0);
    if (bit_shift == 0) {
        r.limbs_.insert(r.limbs_.end(), limbs_.begin(), limbs_.end());
    } else {
        std::uint64_t carry = 0;
        for (std::uint64_t limb : limbs_) {
            r.limbs_.push_back((limb << bit_shift) | carry);
            carry = limb >> (64 - bit_shift);
        }
        if (carry) r.limbs_.push_back(carry);
    }
    return r;
}

double BigNat::to_double() const {
    if (is_zero()) return 0.0;
    std::size_t n = limbs_.size();
    double top = static_cast<double>(limbs_[n - 1]);
    if (n >= 2) top = top * 0x1p64 + static_cast<double>(limbs_[n - 2]);
    if (n >= 3) top += static_cast<double>(limbs_[n - 3]) * 0x1p-64;
    int shift = 64 * static_cast<int>(n >= 2 ? n - 2 : 0);
    return std::ldexp(top, shift);
}

BigNat BigNat::from_double_integer(double d) {
    assert(d >= 0.0 && std::isfinite(d) && std::floor(d) == d);
    BigNat r;
    if (d == 0.0) return r;
    int exp = 0;
    double m = std::frexp(d, &exp);           // d = m * 2^exp, m in [0.5, 1)
    std::uint64_t mant = static_cast<std::uint64_t>(std::ldexp(m, 64));  // exact: 53 <= 64 bits
    int shift = exp - 64;                     // d = mant * 2^shift
    if (shift >= 0) {
        r.limbs_.assign(shift / 64, 0);
        int bits = shift % 64;
        if (bits == 0) {
            r.limbs_.push_back(mant);
        } else {
            r.limbs_.push_back(mant << bits);
            r.limbs_.push_back(mant >> (64 - bits));
        }
    } else {
        // d integral and < 2^64
        r.limbs_.push_back(mant >> (-shift));
    }
    r.normalize();
    return r;
}

int BigNat::bit_length() const {
    if (is_zero()) return 0;
    std::uint64_t top = limbs_.back();
    int b = 0;
    while (top) {
        ++b;
        top >>= 1;
    }
    return 64 * static_cast<int>(limbs_.size() - 1) + b;
}

Dd BigNat::to_dd_scaled(long& exp) const {
    if (is_zero()) {
        exp = 0;
        return Dd(0.0);
    }
    std::size_t n = limbs_.size();
    if (n <= 3) {
        exp = 0;
        return to_dd();
    }
    Dd v = dd_add(dd_mul(Dd(static_cast<double>(limbs_[n - 1])), 0x1p128),
                  dd_add(dd_mul(Dd(static_cast<double>(limbs_[n - 2])), 0x1p64),
                         Dd(static_cast<double>(limbs_[n - 3]))));
    exp = 64L * static_cast<long>(n - 3);
    return v;
}

Dd BigNat::to_dd() const {
    double hi = to_double();
    if (hi == 0.0) return Dd(0.0);
    BigNat h = from_double_integer(hi);
    double lo;
    if (h.cmp(*this) <= 0)
        lo = sub(*this, h).to_double();
    else
        lo = -sub(h, *this).to_double();
    return dd_detail::quick_two_sum(hi, lo);
}

std::string BigNat::to_string() const {
    if (is_zero()) return "0";
    // repeated division by 1e18 (small-divisor long division)
    std::vector<std::uint64_t> work = limbs_;
    std::string out;
    const std::uint64_t base = 1000000000000000000ull;
    while (!work.empty()) {
        unsigned __int128 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | work[i];
            work[i] = static_cast<std::uint64_t>(cur / base);
            rem = cur % base;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::string chunk = std::to_string(static_cast<std::uint64_t>(rem));
        if (work.empty()) {
            out = chunk + out;
        } else {
            out = std::string(18 - chunk.size(), '0') + chunk + out;
        }
    }
    return out;
}

BigInt::BigInt(std::int64_t v) {
    if (v > 0) {
        sign = 1;
        mag = BigNat(static_cast<std::uint64_t>(v));
    } else if (v < 0) {
        sign = -1;
        mag = BigNat(static_cast<std::uint64_t>(-v));
    }
}

BigInt BigInt::add(const BigInt& a, const BigInt& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    BigInt r;
    if (a.sign == b.sign) {
        r.sign = a.sign;
        r.mag = BigNat::add(a.mag, b.mag);
        return r;
    }
    int c = a.mag.cmp(b.mag);
    if (c == 0) return r;
    if (c > 0) {
        r.sign = a.sign;
        r.mag = BigNat::sub(a.mag, b.mag);
    } else {
        r.sign = b.sign;
        r.mag = BigNat::sub(b.mag, a.mag);
    }
    return r;
}

BigInt BigInt::mul(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign == 0 || b.sign == 0) return r;
    r.sign = a.sign * b.sign;
    r.mag = BigNat::mul(a.mag, b.mag);
    return r;
}

BigInt BigInt::mul_small(std::int64_t m) const {
    BigInt r;
    if (m == 0 || sign == 0) return r;
    r.sign = m > 0 ? sign : -sign;
    r.mag = mag.mul_small(static_cast<std::uint64_t>(m > 0 ? m : -m));
    return r;
}

BigInt BigInt::half() const {
    BigInt r;
    r.sign = sign;
    r.mag = mag.half();
    if (r.mag.is_zero()) r.sign = 0;
    return r;
}

BigInt BigInt::shl(unsigned bits) const {
    BigInt r;
    r.sign = sign;
    r.mag = mag.shl(bits);
    return r;
}

Dd BigInt::to_dd() const {
    Dd d = mag.to_dd();
    return sign < 0 ? dd_neg(d) : d;
}

std::string BigInt::to_string() const {
    if (sign == 0) return "0";
    return (sign < 0 ? "-" : "") + mag.to_string();
}

}  // namespace ym2d
