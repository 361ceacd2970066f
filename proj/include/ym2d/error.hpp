#ifndef YM2D_ERROR_HPP_
#define YM2D_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ym2d {

enum class errc {
    // geometry / input validation
    bad_angles,
    negative_radius,
    crossing_arcs,
    arc_not_in_grid,
    bad_loop,
    // engine caps
    k_too_large,
    n_too_large,
    word_too_long,
    unknown_lasso_key,
    missing_area,
    // front end
    parse_error,
    unknown_loop,
};

/// Single exception type for all contract violations; carries a code so the
/// CLI can map errors onto exit statuses.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::bad_angles: return "BadAngles";
    case errc::negative_radius: return "NegativeRadius";
    case errc::crossing_arcs: return "CrossingArcs";
    case errc::arc_not_in_grid: return "ArcNotInGrid";
    case errc::bad_loop: return "BadLoop";
    case errc::k_too_large: return "KTooLarge";
    case errc::n_too_large: return "NTooLarge";
    case errc::word_too_long: return "WordTooLong";
    case errc::unknown_lasso_key: return "UnknownLassoKey";
    case errc::missing_area: return "MissingArea";
    case errc::parse_error: return "ParseError";
    case errc::unknown_loop: return "UnknownLoop";
    }
    return "Error";
}

}  // namespace ym2d

#endif  // YM2D_ERROR_HPP_
