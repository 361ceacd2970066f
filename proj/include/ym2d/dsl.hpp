#ifndef YM2D_DSL_HPP_
#define YM2D_DSL_HPP_

#include <string>
#include <utility>
#include <vector>

#include "ym2d/geometry.hpp"

namespace ym2d {

/// Parsed loop-DSL file:
///   { "angles": [..],
///     "arcs":   [{"id": .., "sector": .., "samples": [..]}, ..],
///     "loops":  [{"name": .., "word": ["+id", "-id", ..]}, ..] }
/// Angles in radians; sectors 1-based; word letters carry an explicit sign
/// prefix.  Loops keep file order so serialization round-trips.
struct LoopFile {
    std::vector<double> angles;
    std::vector<Arc> arcs;
    std::vector<std::pair<std::string, LoopWord>> loops;

    bool operator==(const LoopFile&) const = default;

    const LoopWord& loop(const std::string& name) const;  // throws UnknownLoop
    Grid make_grid() const { return Grid::validate(angles, arcs); }
};

LoopFile parse_dsl(const std::string& json_text);
std::string serialize_dsl(const LoopFile& file);
LoopFile load_dsl_file(const std::string& path);

}  // namespace ym2d

#endif  // YM2D_DSL_HPP_
