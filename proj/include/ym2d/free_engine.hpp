#ifndef YM2D_FREE_ENGINE_HPP_
#define YM2D_FREE_ENGINE_HPP_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ym2d/geometry.hpp"
#include "ym2d/nc.hpp"
#include "ym2d/pk.hpp"

namespace ym2d {

struct EngineConfig {
    int pk_cap = kDefaultPkCap;
    int alternation_cap = kDefaultNcCap;
};

/// Exact expectations of words in freely independent multiplicative
/// semicircular unitaries, one generator per lasso key with parameter equal
/// to the lasso's area.
///
/// tau(g_{i_1}^{e_1} ... g_{i_n}^{e_n}) is the sum over non-crossing
/// partitions of the n letters whose blocks are monochromatic in generator,
/// of the product of per-block free cumulants; mixed-generator blocks vanish
/// by freeness and are never generated.  The sum is evaluated by the
/// first-block recursion over intervals (memoized), which visits every
/// monochromatic partition exactly once and stays polynomial where literal
/// enumeration would be Catalan(n).
///
/// Instances memoize cumulants and are not internally synchronized; use one
/// engine per thread (queries are deterministic either way).
class FreeEngine {
  public:
    explicit FreeEngine(EngineConfig cfg = {}) : cfg_(cfg) {}

    const EngineConfig& config() const { return cfg_; }

    /// kappa(u^{e_1}, ..., u^{e_m}) for a single generator with law `law`,
    /// by moment-cumulant inversion; the moment of any block is
    /// law.moment(sum of its exponents).
    double free_cumulant(const MscLaw& law, const std::vector<std::int64_t>& exponents);

    /// tau((word)^power).  The word is normalized, repeated |power| times
    /// (reversed with negated exponents when power < 0), and normalized
    /// again; the result's letter count must not exceed the alternation cap.
    double word_moment(const LassoWord& word, std::int64_t power);

    /// decompose + word_moment: the Wilson loop expectation tau(u_c^power).
    double wilson_loop(const LoopWord& loop, const Grid& grid, std::int64_t power);

  private:
    double kappa(double t, const std::vector<std::int64_t>& exps);

    EngineConfig cfg_;
    std::map<std::pair<double, std::vector<std::int64_t>>, double> kappa_memo_;
};

}  // namespace ym2d

#endif  // YM2D_FREE_ENGINE_HPP_
