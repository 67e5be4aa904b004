#ifndef KTC_VERIFY_HPP
#define KTC_VERIFY_HPP

#include "ktc/model.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ktc {

/// One per-algorithm guarantee: the numeric limit it evaluates to on this
/// instance and whether the coloring respects it.
struct BoundCheck {
    long long limit = 0;
    bool satisfied = false;
};

struct VerificationReport {
    std::string algorithm;
    bool unit = false;
    bool proper = false;
    /// Same-color overlapping pairs, (smaller id, larger id), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> violations;
    int distinct_colors = 0;
    std::size_t omega = 0;
    /// Level -> number of distinct colors used on that level.
    std::map<int, int> palette_sizes;
    /// Whether the level-2 intervals pairwise intersect at most once
    /// each. Present only for the leveled colorer on unit instances.
    std::optional<bool> level2_matching;
    std::map<std::string, BoundCheck> bounds;

    bool all_ok() const;
};

/// Validates the result against the instance (ids, levels, colors, stored
/// color count) and evaluates properness plus the guarantees appropriate
/// to the algorithm named in the result. Structural mismatches throw
/// std::invalid_argument; guarantee failures are reported, not thrown.
VerificationReport check(const Instance& instance, const ColoringResult& result);

/// True iff every level-2 interval overlaps at most one other level-2
/// interval. Only meaningful for unit intervals; throws otherwise.
bool level2_intersections_form_matching(const Instance& instance, const ColoringResult& result);

/// Exact chromatic number by exhaustive search. Refuses instances larger
/// than `limit` (the search is exponential).
std::size_t exact_chromatic_number(const Instance& instance, std::size_t limit = 15);

std::string render_report_json(const VerificationReport& report);

}  // namespace ktc

#endif  // KTC_VERIFY_HPP
