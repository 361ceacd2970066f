#ifndef YM2D_RNG_HPP_
#define YM2D_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>

namespace ym2d {

/// xoshiro256++ with splitmix64 seeding and a Box-Muller gaussian.
/// Self-contained so that streams are bit-identical across platforms and
/// standard libraries; per-sample streams are derived from (seed, index),
/// which makes estimates independent of execution order.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : s_) s = splitmix64(x);
    }

    static Rng for_sample(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t x = seed;
        (void)splitmix64(x);
        x ^= 0x9e3779b97f4a7c15ull * (index + 1);
        return Rng(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

    /// standard normal
    double gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        // u1 in (0,1] keeps the log finite
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1p-53;
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi_v<double> * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t s_[4];
    bool have_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace ym2d

#endif  // YM2D_RNG_HPP_
