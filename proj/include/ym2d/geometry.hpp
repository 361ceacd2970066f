#ifndef YM2D_GEOMETRY_HPP_
#define YM2D_GEOMETRY_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ym2d {

/// Radius comparisons treat values within this of each other as equal.
inline constexpr double kRadiusTol = 1e-12;
/// Faces with area at or below this have no usable interior point.
inline constexpr double kDegenerateAreaTol = 1e-12;

/// Cross-radial arc: a piecewise-linear radius function over one sector,
/// sampled at uniformly spaced angles (at least two samples).
struct Arc {
    std::string id;
    int sector = 0;  // 1-based index into the grid's sector list
    std::vector<double> samples;

    bool operator==(const Arc&) const = default;

    /// radius at fraction u in [0,1] across the sector
    double radius_at(double u) const;
};

/// Identifies the minimal lasso bounded by level `level` and `level-1` in
/// sector `sector` (levels are 1-based; level 0 is the zero arc).
struct LassoKey {
    int sector = 0;
    int level = 0;

    auto operator<=>(const LassoKey&) const = default;
};

std::string to_string(const LassoKey& key);

struct LoopLetter {
    std::string arc;
    int sign = 1;  // +1 forward (angle increasing), -1 reverse

    bool operator==(const LoopLetter&) const = default;
};

/// A loop as a word of signed arcs; list order is traversal order.  Radial
/// connectors between consecutive arcs (and the tails joining the basepoint)
/// are implicit since their holonomy is trivial.
struct LoopWord {
    std::vector<LoopLetter> letters;

    bool operator==(const LoopWord&) const = default;
};

struct LassoLetter {
    LassoKey key;
    std::int64_t exponent = 0;

    bool operator==(const LassoLetter&) const = default;
};

/// A loop decomposed over minimal-lasso generators, with the enclosed area
/// of each generator that occurs.
struct LassoWord {
    std::vector<LassoLetter> letters;
    std::map<LassoKey, double> areas;

    bool operator==(const LassoWord&) const = default;
};

/// Merge adjacent letters with equal keys (summing exponents) and drop zero
/// exponents, cascading.
std::vector<LassoLetter> normalize_lasso_letters(const std::vector<LassoLetter>& letters);

/// Net exponent per generator.
std::map<LassoKey, std::int64_t> net_exponents(const LassoWord& word);

/// Polar grid: sector angles 0 = theta_0 < ... < theta_N = 2pi and, per
/// sector, nested arcs (level 1 innermost).  Owns the minimal-lasso areas
///   area(j,k) = 1/2 int (r_{jk}^2 - r_{j,k-1}^2) dtheta,
/// integrated in closed form (r is piecewise linear, so r^2 is piecewise
/// quadratic).
class Grid {
  public:
    /// Checks angle monotonicity/endpoints, sample nonnegativity, and that
    /// arcs within a sector are strictly nested away from sector endpoints;
    /// sorts arcs into levels and computes lasso areas.
    static Grid validate(std::vector<double> angles, std::vector<Arc> arcs);

    int sector_count() const { return static_cast<int>(angles_.size()) - 1; }
    const std::vector<double>& angles() const { return angles_; }
    double sector_start(int sector) const { return angles_[static_cast<std::size_t>(sector - 1)]; }
    double sector_end(int sector) const { return angles_[static_cast<std::size_t>(sector)]; }

    int levels(int sector) const;
    const Arc& arc(int sector, int level) const;
    bool has_arc(const std::string& id) const { return by_id_.count(id) != 0; }
    LassoKey key_of(const std::string& arc_id) const;

    double lasso_area(const LassoKey& key) const;
    const std::map<LassoKey, double>& lasso_areas() const { return areas_; }

  private:
    std::vector<double> angles_;
    std::vector<std::vector<Arc>> sectors_;  // [sector-1][level-1]
    std::map<std::string, LassoKey> by_id_;
    std::map<LassoKey, double> areas_;
};

/// Free reduction: repeatedly erase adjacent (a,+1)(a,-1) / (a,-1)(a,+1)
/// pairs.  Idempotent; the result is the unique reduced word.
LoopWord backtrack_reduce(const LoopWord& word);

/// Check arc existence, radial connectability of consecutive letters, and
/// closure mod 2pi; throws ArcNotInGrid / BadLoop.
void validate_loop(const LoopWord& word, const Grid& grid);

/// Expand each signed arc into its run of minimal lassos (level k arc ->
/// l_{j,1} ... l_{j,k}, reversed with inverse exponents for sign -1) and
/// normalize.
LassoWord decompose(const LoopWord& word, const Grid& grid);

/// Winding number of the loop around an interior point of each
/// non-degenerate face, by the angle-sum oracle along the polygonalized
/// loop.  Degenerate (zero-area) faces are absent from the result.
std::map<LassoKey, int> face_windings(const LoopWord& word, const Grid& grid);

}  // namespace ym2d

#endif  // YM2D_GEOMETRY_HPP_
