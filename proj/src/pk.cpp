#include "ym2d/pk.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

#include "ym2d/error.hpp"

namespace ym2d {

namespace {

// C(n,r) for n <= 66 fits in uint64 (C(66,33) ~ 7.2e18).
constexpr int kBinomRows = 67;

const std::uint64_t* binom_row(int n) {
    static std::uint64_t table[kBinomRows][kBinomRows];
    static std::once_flag once;
    std::call_once(once, [] {
        for (int i = 0; i < kBinomRows; ++i) {
            table[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                table[i][j] = table[i - 1][j - 1] + (j <= i - 1 ? table[i - 1][j] : 0);
        }
    });
    return table[n];
}

// t = T * 2^p exactly (every double is a dyadic rational)
struct Dyadic {
    BigInt T;
    int p = 0;
};

Dyadic split_dyadic(double t) {
    Dyadic d;
    if (t == 0.0) return d;
    int e = 0;
    double m = std::frexp(t, &e);
    auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));  // exact
    int p = e - 53;
    while (mant % 2 == 0) {
        mant /= 2;
        ++p;
    }
    d.T = BigInt(mant);
    d.p = p;
    return d;
}

BigNat factorial_nat(int n) {
    BigNat f(1);
    for (int i = 2; i <= n; ++i) f = f.mul_small(static_cast<std::uint64_t>(i));
    return f;
}

// quotient of two huge naturals as a double (power-of-two scaling keeps the
// intermediate mantissas in range)
double nat_quotient(const BigNat& num, const BigNat& den, int sign) {
    if (num.is_zero()) return 0.0;
    long en = 0, ed = 0;
    Dd mn = num.to_dd_scaled(en);
    Dd md = den.to_dd_scaled(ed);
    Dd q = dd_div(mn, md);
    long e = en - ed;
    double hi = std::ldexp(q.hi, static_cast<int>(e));
    double lo = std::ldexp(q.lo, static_cast<int>(e));
    return sign * (hi + lo);
}

// signed accumulate
void acc(BigInt& sum, const BigInt& term) { sum = BigInt::add(sum, term); }

}  // namespace

/// Owns the exactly-constructed P_k rows; grows on demand.
class PkTable {
  public:
    static PkTable& instance() {
        static PkTable t;
        return t;
    }

    const PkPolynomial& get(int k) {
        std::lock_guard<std::mutex> lock(mu_);
        build_to(k);
        return rows_[static_cast<std::size_t>(k)];
    }

  private:
    PkTable() {
        rows_.resize(2);
        for (int k : {0, 1}) {
            rows_[static_cast<std::size_t>(k)].k_ = k;
            rows_[static_cast<std::size_t>(k)].egf_ = {BigInt(1)};
        }
    }

    // In the representation P_k(t) = sum_j a_{k,j} t^j / j!, the recursion
    //   dP_k/dt = -(k/2) sum_{j=1}^{k-1} P_j P_{k-j}
    // reads  a_{k,d} = -(k/2) sum_j sum_r C(d-1,r) a_{j,r} a_{k-j,d-1-r},
    // which stays integral: the inner sum is even when k is odd (j <-> k-j
    // pairing), and k/2 is integral otherwise.
    void build_to(int k) {
        for (int m = static_cast<int>(rows_.size()); m <= k; ++m) {
            PkPolynomial p;
            p.k_ = m;
            p.egf_.assign(static_cast<std::size_t>(m), BigInt());
            p.egf_[0] = BigInt(1);
            for (int d = 1; d <= m - 1; ++d) {
                const std::uint64_t* binom = binom_row(d - 1);
                BigInt total;
                for (int j = 1; j <= m - 1; ++j) {
                    const auto& a = rows_[static_cast<std::size_t>(j)].egf_;
                    const auto& b = rows_[static_cast<std::size_t>(m - j)].egf_;
                    int rlo = std::max(0, (d - 1) - (m - j - 1));
                    int rhi = std::min(d - 1, j - 1);
                    for (int r = rlo; r <= rhi; ++r) {
                        BigInt term = BigInt::mul(a[static_cast<std::size_t>(r)],
                                                  b[static_cast<std::size_t>(d - 1 - r)]);
                        acc(total, term.mul_small(static_cast<std::int64_t>(binom[r])));
                    }
                }
                if (m % 2 == 0)
                    p.egf_[static_cast<std::size_t>(d)] = total.mul_small(-(m / 2));
                else
                    p.egf_[static_cast<std::size_t>(d)] = total.half().mul_small(-m);
            }
            rows_.push_back(std::move(p));
        }
    }

    std::mutex mu_;
    std::vector<PkPolynomial> rows_;
};

const PkPolynomial& PkPolynomial::get(int k, int cap) {
    if (k < 0) throw Error(errc::k_too_large, "P_k: negative k");
    if (k > cap)
        throw Error(errc::k_too_large,
                    "P_k: k=" + std::to_string(k) + " exceeds cap " + std::to_string(cap));
    return PkTable::instance().get(k);
}

std::vector<double> PkPolynomial::coefficients() const {
    std::vector<double> c(egf_.size());
    BigNat fact(1);
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j > 1) fact = fact.mul_small(j);
        c[j] = nat_quotient(egf_[j].mag, fact, egf_[j].sign);
    }
    return c;
}

// P_k(t) = sum_j a_j t^j / j! evaluated exactly: with t = T 2^p, s = max(0,-p)
// and d = deg,
//   P = [ sum_j a_j T^j 2^{(p+s) j + s (d-j)} (d!/j!) ] / (d! 2^{s d}).
double PkPolynomial::eval(double t) const {
    const int d = degree();
    if (d == 0 || t == 0.0) return 1.0;
    Dyadic dy = split_dyadic(t);
    const unsigned s = dy.p < 0 ? static_cast<unsigned>(-dy.p) : 0u;
    const unsigned q = static_cast<unsigned>(dy.p + static_cast<int>(s));

    // d!/j! descending: f[d] = 1, f[j-1] = f[j] * j
    std::vector<BigNat> fall(static_cast<std::size_t>(d) + 1);
    fall[static_cast<std::size_t>(d)] = BigNat(1);
    for (int j = d; j >= 1; --j)
        fall[static_cast<std::size_t>(j - 1)] =
            fall[static_cast<std::size_t>(j)].mul_small(static_cast<std::uint64_t>(j));

    BigInt num;
    BigInt tpow(1);
    for (int j = 0; j <= d; ++j) {
        if (j > 0) tpow = BigInt::mul(tpow, dy.T);
        BigInt term = BigInt::mul(egf_[static_cast<std::size_t>(j)], tpow);
        term.mag = BigNat::mul(term.mag, fall[static_cast<std::size_t>(j)]);
        term = term.shl(q * static_cast<unsigned>(j) + s * static_cast<unsigned>(d - j));
        acc(num, term);
    }
    BigNat den = fall[0].shl(s * static_cast<unsigned>(d));  // d! 2^{s d}
    return nat_quotient(num.mag, den, num.sign);
}

double pk_recursion(int k, double t, int cap) { return PkPolynomial::get(k, cap).eval(t); }

// n P_n(t) = sum_{k=0}^{n-1} (-1)^k t^k/k! n^k C(n,k+1); evaluated exactly
// over the common denominator n (n-1)! 2^{s(n-1)}.
double pk_closed(int n, double t) {
    if (n < 1) throw Error(errc::k_too_large, "pk_closed: n must be >= 1");
    if (n >= kBinomRows - 1)
        throw Error(errc::k_too_large, "pk_closed: n too large for exact binomials");
    const int d = n - 1;
    if (d == 0 || t == 0.0) return 1.0;
    Dyadic dy = split_dyadic(t);
    const unsigned s = dy.p < 0 ? static_cast<unsigned>(-dy.p) : 0u;
    const unsigned q = static_cast<unsigned>(dy.p + static_cast<int>(s));
    const std::uint64_t* binom = binom_row(n);

    std::vector<BigNat> fall(static_cast<std::size_t>(d) + 1);
    fall[static_cast<std::size_t>(d)] = BigNat(1);
    for (int j = d; j >= 1; --j)
        fall[static_cast<std::size_t>(j - 1)] =
            fall[static_cast<std::size_t>(j)].mul_small(static_cast<std::uint64_t>(j));

    BigInt num;
    BigInt tpow(1);
    BigNat npow(1);
    for (int k = 0; k <= d; ++k) {
        if (k > 0) {
            tpow = BigInt::mul(tpow, dy.T);
            npow = npow.mul_small(static_cast<std::uint64_t>(n));
        }
        BigInt term = tpow;
        if (k % 2 == 1) term.sign = -term.sign;
        term.mag = BigNat::mul(term.mag, npow);
        term.mag = BigNat::mul(term.mag, fall[static_cast<std::size_t>(k)]);
        term = term.mul_small(static_cast<std::int64_t>(binom[k + 1]));
        term = term.shl(q * static_cast<unsigned>(k) + s * static_cast<unsigned>(d - k));
        acc(num, term);
    }
    BigNat den = fall[0].mul_small(static_cast<std::uint64_t>(n)).shl(s * static_cast<unsigned>(d));
    return nat_quotient(num.mag, den, num.sign);
}

// P_n(t) = (1/n) L^{(1)}_{n-1}(n t).  With x = n t = X / 2^s the three-term
// recurrence  m L_m = (2m - x) L_{m-1} - m L_{m-2}  closes over integers for
// B_m = L_m m! 2^{s m}:  B_m = (2m 2^s - X) B_{m-1} - m (m-1) 2^{2s} B_{m-2}.
double pk_laguerre(int n, double t) {
    if (n < 1) throw Error(errc::k_too_large, "pk_laguerre: n must be >= 1");
    if (n == 1 || t == 0.0) return 1.0;
    Dyadic dy = split_dyadic(t);
    dy.T = dy.T.mul_small(n);  // x = n t
    unsigned s = 0;
    BigInt x = dy.T;
    if (dy.p < 0)
        s = static_cast<unsigned>(-dy.p);
    else
        x = x.shl(static_cast<unsigned>(dy.p));

    BigInt b_prev(1);                                      // B_0
    BigInt b_cur = BigInt::add(BigInt(2).shl(s), x.mul_small(-1));  // B_1 = 2*2^s - X
    for (int m = 2; m <= n - 1; ++m) {
        BigInt a = BigInt::add(BigInt(2 * m).shl(s), x.mul_small(-1));
        BigInt next = BigInt::add(
            BigInt::mul(a, b_cur),
            BigInt::mul(b_prev, BigInt(-m * (m - 1)).shl(2 * s)));
        b_prev = b_cur;
        b_cur = next;
    }
    BigNat den = factorial_nat(n - 1).shl(s * static_cast<unsigned>(n - 1));
    den = den.mul_small(static_cast<std::uint64_t>(n));
    return nat_quotient(b_cur.mag, den, b_cur.sign);
}

double msc_moment(double t, std::int64_t k, int cap) {
    if (t < 0) throw Error(errc::bad_loop, "msc_moment: negative area parameter");
    std::int64_t ka = std::llabs(k);
    if (ka == 0) return 1.0;
    if (ka > cap)
        throw Error(errc::k_too_large,
                    "msc_moment: |k|=" + std::to_string(ka) + " exceeds cap " + std::to_string(cap));
    // e^{-kt/2} P_k(t); both factors stay in double range for k*t <~ 1400,
    // far past which the moment is indistinguishable from 0.
    if (static_cast<double>(ka) * t > 1400.0) return 0.0;
    const PkPolynomial& p = PkPolynomial::get(static_cast<int>(ka), cap);
    return p.eval(t) * std::exp(-0.5 * static_cast<double>(ka) * t);
}

}  // namespace ym2d
