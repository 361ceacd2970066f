#ifndef YM2D_PK_HPP_
#define YM2D_PK_HPP_

#include <cstdint>
#include <vector>

#include "ym2d/bigint.hpp"

namespace ym2d {

inline constexpr int kDefaultPkCap = 64;

/// Moment polynomial of free multiplicative Brownian motion: P_0 = P_1 = 1
/// and dP_k/dt = -(k/2) sum_{j=1}^{k-1} P_j P_{k-j}, P_k(0) = 1.  The moment
/// of the time-t unitary is e^{-kt/2} P_k(t).
///
/// Coefficients are held exactly: P_k(t) = sum_j a_j t^j / j! with integer
/// a_j (the recursion is closed over this form).  Evaluation is also exact:
/// t is a dyadic rational, so P_k(t) is one big-integer sum over a common
/// denominator, converted to floating point only at the end.  The monomial
/// terms cancel from ~1e70 down to ~1e10 around k=50, t=5, which no fixed
/// float width survives.
class PkPolynomial {
  public:
    int k() const { return k_; }
    int degree() const { return k_ > 0 ? k_ - 1 : 0; }

    /// a_j as exact integers; coefficient of t^j is a_j / j!.
    const std::vector<BigInt>& egf_coefficients() const { return egf_; }
    /// coefficients of t^j as doubles
    std::vector<double> coefficients() const;

    double eval(double t) const;

    /// shared, lazily built table; thread-safe
    static const PkPolynomial& get(int k, int cap = kDefaultPkCap);

  private:
    int k_ = 0;
    std::vector<BigInt> egf_;
    friend class PkTable;
};

/// P_k(t) by integrating the moment recursion term-by-term (exact integer
/// construction, double-double Horner evaluation).
double pk_recursion(int k, double t, int cap = kDefaultPkCap);

/// P_n(t) by the explicit alternating sum  sum_{k=0}^{n-1} (-1)^k t^k/k! n^{k-1} C(n,k+1).
double pk_closed(int n, double t);

/// P_n(t) = (1/n) L^{(1)}_{n-1}(n t) via the associated Laguerre three-term
/// recurrence.
double pk_laguerre(int n, double t);

/// k-th moment of the multiplicative semicircular law of parameter t:
/// e^{-|k| t / 2} P_{|k|}(t).  moment(-k) = moment(k).
double msc_moment(double t, std::int64_t k, int cap = kDefaultPkCap);

/// Multiplicative semicircular law with area parameter t >= 0.
struct MscLaw {
    double t = 0.0;
    int pk_cap = kDefaultPkCap;

    double moment(std::int64_t k) const { return msc_moment(t, k, pk_cap); }
};

}  // namespace ym2d

#endif  // YM2D_PK_HPP_
