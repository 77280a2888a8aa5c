#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace girth5 {

/// Best size per order after seeding and after every half-pass.
struct BoundsRow {
    std::size_t n = 0;
    std::optional<std::size_t> seeded;
    /// up1, down1, up2, down2, ...
    std::vector<std::optional<std::size_t>> half_passes;
    std::optional<std::size_t> final_size;
};

struct BoundsTable {
    std::vector<BoundsRow> rows;
};

/// order -> previously known lower bound
using PreviousBounds = std::map<std::size_t, std::size_t>;

struct Report {
    std::string text;  ///< aligned, for humans
    std::string csv;   ///< `n,up1,down1,up2,down2,final,previous,improved`
};

/// The csv header always lists at least two passes; runs with more passes
/// append `up3,down3,...` before `final`.
Report report(const BoundsTable& table, const std::optional<PreviousBounds>& previous);

/// Parses a bounds csv written by `report` (previous/improved are ignored).
BoundsTable parse_bounds_csv(const std::string& csv);

/// Reads `n,value` lines (a header line is allowed).
PreviousBounds read_previous_bounds(const std::filesystem::path& file);

/// Best lower bounds from the literature for 50 <= n <= 203 that new runs
/// are compared against.
const PreviousBounds& literature_bounds();

}  // namespace girth5
