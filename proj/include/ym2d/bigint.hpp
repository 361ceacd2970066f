#ifndef YM2D_BIGINT_HPP_
#define YM2D_BIGINT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ym2d/dd.hpp"

namespace ym2d {

/// Arbitrary-precision unsigned integer, base 2^64 limbs, little-endian.
/// Just enough arithmetic for exact moment-polynomial coefficients; no
/// division beyond halving is ever needed there.
class BigNat {
  public:
    BigNat() = default;
    explicit BigNat(std::uint64_t v);

    bool is_zero() const { return limbs_.empty(); }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    /// -1, 0, +1 as *this compares to other.
    int cmp(const BigNat& other) const;

    static BigNat add(const BigNat& a, const BigNat& b);
    /// requires a >= b
    static BigNat sub(const BigNat& a, const BigNat& b);
    static BigNat mul(const BigNat& a, const BigNat& b);
    BigNat mul_small(std::uint64_t m) const;
    /// exact halving; requires even
    BigNat half() const;
    BigNat shl(unsigned bits) const;

    double to_double() const;
    Dd to_dd() const;
    int bit_length() const;
    /// top ~192 bits as a Dd plus a power-of-two exponent: *this = dd * 2^exp
    Dd to_dd_scaled(long& exp) const;
    std::string to_string() const;  // decimal, for diagnostics/tests

    /// exact conversion; d must be a nonnegative integral double
    static BigNat from_double_integer(double d);

  private:
    void normalize();
    std::vector<std::uint64_t> limbs_;
};

/// Signed wrapper over BigNat.
struct BigInt {
    int sign = 0;  // -1, 0, +1
    BigNat mag;

    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt add(const BigInt& a, const BigInt& b);
    static BigInt mul(const BigInt& a, const BigInt& b);
    BigInt mul_small(std::int64_t m) const;
    BigInt half() const;
    BigInt shl(unsigned bits) const;
    bool is_even() const { return mag.is_even(); }
    bool is_zero() const { return sign == 0; }

    double to_double() const { return sign * mag.to_double(); }
    Dd to_dd() const;
    std::string to_string() const;
};

}  // namespace ym2d

#endif  // YM2D_BIGINT_HPP_
