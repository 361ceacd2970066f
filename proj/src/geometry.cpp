#include "ym2d/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ym2d/error.hpp"

namespace ym2d {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

double integral_r_squared(const Arc& arc, double span) {
    // sum over linear pieces: h * (r0^2 + r0 r1 + r1^2) / 3
    const auto& s = arc.samples;
    double h = span / static_cast<double>(s.size() - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        acc += h * (s[i] * s[i] + s[i] * s[i + 1] + s[i + 1] * s[i + 1]) / 3.0;
    return acc;
}

// breakpoint fractions of both arcs, merged
std::vector<double> union_fractions(const Arc& a, const Arc& b) {
    std::vector<double> u;
    auto push_all = [&u](std::size_t m) {
        for (std::size_t i = 0; i < m; ++i)
            u.push_back(static_cast<double>(i) / static_cast<double>(m - 1));
    };
    push_all(a.samples.size());
    push_all(b.samples.size());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-14; }),
            u.end());
    return u;
}

// +1 if a strictly above b at all interior breakpoints, -1 for the reverse;
// throws CrossingArcs on sign changes, interior contact, or duplicates.
int compare_arcs(const Arc& a, const Arc& b) {
    std::vector<double> u = union_fractions(a, b);
    int interior_sign = 0;
    bool all_equal = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
        double d = a.radius_at(u[i]) - b.radius_at(u[i]);
        int c = d > kRadiusTol ? 1 : (d < -kRadiusTol ? -1 : 0);
        if (c != 0) all_equal = false;
        bool endpoint = (i == 0 || i + 1 == u.size());
        if (endpoint) {
            if (c != 0 && interior_sign != 0 && c != interior_sign)
                throw Error(errc::crossing_arcs,
                            "arcs '" + a.id + "' and '" + b.id + "' cross at a sector endpoint");
            if (c != 0 && interior_sign == 0) interior_sign = c;
            continue;
        }
        if (c == 0)
            throw Error(errc::crossing_arcs, "arcs '" + a.id + "' and '" + b.id +
                                                 "' touch at an interior angle");
        if (interior_sign == 0) interior_sign = c;
        if (c != interior_sign)
            throw Error(errc::crossing_arcs,
                        "arcs '" + a.id + "' and '" + b.id + "' cross inside the sector");
    }
    if (all_equal)
        throw Error(errc::crossing_arcs,
                    "arcs '" + a.id + "' and '" + b.id + "' coincide (duplicate arc)");
    // two-sample arcs can still cross if only endpoints exist and one side ties
    if (interior_sign == 0)
        throw Error(errc::crossing_arcs,
                    "arcs '" + a.id + "' and '" + b.id + "' are not strictly ordered");
    return interior_sign;
}

// nodes are sector-boundary indices in 0..N, with N identified with 0
int letter_start_node(const LoopLetter& l, const Grid& grid) {
    LassoKey k = grid.key_of(l.arc);
    return l.sign > 0 ? k.sector - 1 : k.sector;
}

int letter_end_node(const LoopLetter& l, const Grid& grid) {
    LassoKey k = grid.key_of(l.arc);
    return l.sign > 0 ? k.sector : k.sector - 1;
}

bool same_node(int a, int b, int n_sectors) {
    return ((a - b) % n_sectors + n_sectors) % n_sectors == 0;
}

}  // namespace

double Arc::radius_at(double u) const {
    const double m = static_cast<double>(samples.size() - 1);
    double x = u * m;
    double r = std::round(x);
    if (std::abs(x - r) < 1e-9 && r >= 0 && r <= m)
        return samples[static_cast<std::size_t>(r)];
    auto i = static_cast<std::size_t>(std::floor(x));
    if (i >= samples.size() - 1) i = samples.size() - 2;
    double frac = x - static_cast<double>(i);
    return samples[i] + frac * (samples[i + 1] - samples[i]);
}

std::string to_string(const LassoKey& key) {
    return "l[" + std::to_string(key.sector) + "," + std::to_string(key.level) + "]";
}

std::vector<LassoLetter> normalize_lasso_letters(const std::vector<LassoLetter>& letters) {
    std::vector<LassoLetter> out;
    for (const auto& l : letters) {
        if (l.exponent == 0) continue;
        if (!out.empty() && out.back().key == l.key) {
            out.back().exponent += l.exponent;
            if (out.back().exponent == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

std::map<LassoKey, std::int64_t> net_exponents(const LassoWord& word) {
    std::map<LassoKey, std::int64_t> net;
    for (const auto& l : word.letters) net[l.key] += l.exponent;
    std::erase_if(net, [](const auto& kv) { return kv.second == 0; });
    return net;
}

Grid Grid::validate(std::vector<double> angles, std::vector<Arc> arcs) {
    if (angles.size() < 2) throw Error(errc::bad_angles, "need at least two angles");
    if (std::abs(angles.front()) > kRadiusTol)
        throw Error(errc::bad_angles, "first angle must be 0");
    if (std::abs(angles.back() - kTwoPi) > 1e-9)
        throw Error(errc::bad_angles, "last angle must be 2*pi");
    for (std::size_t i = 0; i + 1 < angles.size(); ++i)
        if (!(angles[i] < angles[i + 1]))
            throw Error(errc::bad_angles, "angles must be strictly increasing");

    Grid g;
    g.angles_ = std::move(angles);
    const int n_sectors = g.sector_count();
    g.sectors_.assign(static_cast<std::size_t>(n_sectors), {});

    std::map<std::string, int> seen;
    for (auto& arc : arcs) {
        if (arc.sector < 1 || arc.sector > n_sectors)
            throw Error(errc::bad_angles, "arc '" + arc.id + "': sector " +
                                              std::to_string(arc.sector) + " out of range");
        if (arc.samples.size() < 2)
            throw Error(errc::bad_angles, "arc '" + arc.id + "': need at least 2 samples");
        for (double r : arc.samples)
            if (!(r >= 0.0))
                throw Error(errc::negative_radius, "arc '" + arc.id + "' has a negative radius");
        if (++seen[arc.id] > 1)
            throw Error(errc::parse_error, "duplicate arc id '" + arc.id + "'");
        g.sectors_[static_cast<std::size_t>(arc.sector - 1)].push_back(std::move(arc));
    }

    for (int j = 1; j <= n_sectors; ++j) {
        auto& group = g.sectors_[static_cast<std::size_t>(j - 1)];
        const int m = static_cast<int>(group.size());
        // all-pairs check; arcs in a valid sector are totally ordered
        std::vector<int> below(static_cast<std::size_t>(m), 0);
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y) {
                int c = compare_arcs(group[static_cast<std::size_t>(x)],
                                     group[static_cast<std::size_t>(y)]);
                ++below[static_cast<std::size_t>(c > 0 ? x : y)];
            }
        std::vector<Arc> sorted(static_cast<std::size_t>(m));
        for (int x = 0; x < m; ++x)
            sorted[static_cast<std::size_t>(below[static_cast<std::size_t>(x)])] =
                std::move(group[static_cast<std::size_t>(x)]);
        group = std::move(sorted);

        double span = g.sector_end(j) - g.sector_start(j);
        double below_integral = 0.0;
        for (int k = 1; k <= m; ++k) {
            const Arc& a = group[static_cast<std::size_t>(k - 1)];
            g.by_id_[a.id] = LassoKey{j, k};
            double integral = integral_r_squared(a, span);
            double area = 0.5 * (integral - below_integral);
            if (area < 0.0) area = 0.0;  // roundoff on touching arcs
            g.areas_[LassoKey{j, k}] = area;
            below_integral = integral;
        }
    }
    return g;
}

int Grid::levels(int sector) const {
    return static_cast<int>(sectors_[static_cast<std::size_t>(sector - 1)].size());
}

const Arc& Grid::arc(int sector, int level) const {
    return sectors_[static_cast<std::size_t>(sector - 1)][static_cast<std::size_t>(level - 1)];
}

LassoKey Grid::key_of(const std::string& arc_id) const {
    auto it = by_id_.find(arc_id);
    if (it == by_id_.end())
        throw Error(errc::arc_not_in_grid, "arc '" + arc_id + "' is not in the grid");
    return it->second;
}

LoopWord backtrack_reduce(const LoopWord& word) {
    LoopWord out;
    for (const auto& l : word.letters) {
        if (!out.letters.empty() && out.letters.back().arc == l.arc &&
            out.letters.back().sign == -l.sign) {
            out.letters.pop_back();
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

void validate_loop(const LoopWord& word, const Grid& grid) {
    if (word.letters.empty()) return;
    const int n = grid.sector_count();
    for (const auto& l : word.letters) {
        grid.key_of(l.arc);  // throws ArcNotInGrid
        if (l.sign != 1 && l.sign != -1)
            throw Error(errc::bad_loop, "letter sign must be +1 or -1");
    }
    for (std::size_t i = 0; i + 1 < word.letters.size(); ++i) {
        if (!same_node(letter_end_node(word.letters[i], grid),
                       letter_start_node(word.letters[i + 1], grid), n))
            throw Error(errc::bad_loop,
                        "letters " + std::to_string(i) + " and " + std::to_string(i + 1) +
                            " are not radially connectable");
    }
    if (!same_node(letter_end_node(word.letters.back(), grid),
                   letter_start_node(word.letters.front(), grid), n))
        throw Error(errc::bad_loop, "word does not close (mod 2*pi)");
}

LassoWord decompose(const LoopWord& word, const Grid& grid) {
    validate_loop(word, grid);
    std::vector<LassoLetter> raw;
    for (const auto& l : word.letters) {
        LassoKey key = grid.key_of(l.arc);
        if (l.sign > 0) {
            for (int k = 1; k <= key.level; ++k)
                raw.push_back({LassoKey{key.sector, k}, 1});
        } else {
            for (int k = key.level; k >= 1; --k)
                raw.push_back({LassoKey{key.sector, k}, -1});
        }
    }
    LassoWord out;
    out.letters = normalize_lasso_letters(raw);
    for (const auto& l : out.letters)
        out.areas.emplace(l.key, grid.lasso_area(l.key));
    return out;
}

double Grid::lasso_area(const LassoKey& key) const {
    auto it = areas_.find(key);
    if (it == areas_.end())
        throw Error(errc::unknown_lasso_key, "no lasso " + to_string(key) + " in grid");
    return it->second;
}

namespace {

struct Pt {
    double x, y;
};

// loop as a closed polygon through the origin, arcs refined so chords track
// the spiral segments closely
std::vector<Pt> polygonalize(const LoopWord& word, const Grid& grid) {
    std::vector<Pt> pts;
    pts.push_back({0.0, 0.0});
    for (const auto& l : word.letters) {
        LassoKey key = grid.key_of(l.arc);
        const Arc& arc = grid.arc(key.sector, key.level);
        double a0 = grid.sector_start(key.sector);
        double a1 = grid.sector_end(key.sector);
        double span = a1 - a0;
        const std::size_t m = arc.samples.size() - 1;
        double piece = span / static_cast<double>(m);
        int refine = std::max(1, static_cast<int>(std::ceil(piece / 0.02)));
        std::vector<Pt> run;
        int total = static_cast<int>(m) * refine;
        for (int i = 0; i <= total; ++i) {
            double u = static_cast<double>(i) / static_cast<double>(total);
            double theta = a0 + u * span;
            double r = arc.radius_at(u);
            run.push_back({r * std::cos(theta), r * std::sin(theta)});
        }
        if (l.sign < 0) std::reverse(run.begin(), run.end());
        pts.insert(pts.end(), run.begin(), run.end());
    }
    pts.push_back({0.0, 0.0});
    return pts;
}

double winding_sum(const std::vector<Pt>& pts, Pt p) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double ax = pts[i].x - p.x, ay = pts[i].y - p.y;
        double bx = pts[i + 1].x - p.x, by = pts[i + 1].y - p.y;
        total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
    }
    return total / kTwoPi;
}

}  // namespace

std::map<LassoKey, int> face_windings(const LoopWord& word, const Grid& grid) {
    validate_loop(word, grid);
    std::vector<Pt> poly = polygonalize(word, grid);
    std::map<LassoKey, int> out;
    for (const auto& [key, area] : grid.lasso_areas()) {
        if (area <= kDegenerateAreaTol) continue;  // no interior point to probe
        double a0 = grid.sector_start(key.sector);
        double span = grid.sector_end(key.sector) - a0;
        const Arc& hi = grid.arc(key.sector, key.level);
        const Arc* lo = key.level > 1 ? &grid.arc(key.sector, key.level - 1) : nullptr;
        bool done = false;
        for (double u : {0.5, 0.35, 0.65, 0.2, 0.8, 0.45, 0.55}) {
            double r_hi = hi.radius_at(u);
            double r_lo = lo ? lo->radius_at(u) : 0.0;
            if (r_hi - r_lo <= 1e-9) continue;
            double theta = a0 + u * span;
            double r = 0.5 * (r_hi + r_lo);
            Pt p{r * std::cos(theta), r * std::sin(theta)};
            double w = winding_sum(poly, p);
            double rounded = std::round(w);
            if (std::abs(w - rounded) < 0.25) {
                out[key] = static_cast<int>(rounded);
                done = true;
                break;
            }
        }
        if (!done)
            throw Error(errc::bad_loop, "winding oracle found no usable probe for face " +
                                            to_string(key));
    }
    return out;
}

}  // namespace ym2d
