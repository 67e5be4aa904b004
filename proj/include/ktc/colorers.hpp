#ifndef KTC_COLORERS_HPP
#define KTC_COLORERS_HPP

#include "ktc/model.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace ktc {

enum class Algo { kt, first_fit, offline_optimal };

std::string_view algo_name(Algo algo);
std::optional<Algo> algo_from_name(std::string_view name);   // "kt", "first_fit", "offline_optimal"
std::optional<Algo> algo_from_token(std::string_view token); // CLI tokens kt / ff / opt

/// One line of the per-arrival trace emitted by the level-based colorer:
/// the witness of the clique query that fixed the interval's level.
struct TraceRecord {
    std::size_t id = 0;
    int level = 1;
    int color = 1;
    Rational witness_point;
    std::size_t witness_size = 1;
};

/// Online coloring state. Arrivals are processed one at a time and
/// assignments are irrevocable; the state after i arrivals depends only
/// on the first i intervals and their order. A run uses either the
/// leveled placement or plain First-Fit, never both.
///
/// Global colors are (level, color) pairs, which keeps per-level
/// palettes disjoint without renumbering.
class OnlineColorer {
public:
    struct LevelDecision {
        int level = 1;
        Rational witness_point;
        std::size_t witness_size = 1;  // clique size containing v at the chosen level
    };

    struct Step {
        Assignment assignment;
        Rational witness_point;
        std::size_t witness_size = 1;
    };

    /// The least j >= 1 such that the largest clique containing v among
    /// already-placed intervals of level <= j, together with v itself,
    /// has size <= j. Pure query; does not modify state.
    LevelDecision level_of(const Interval& v) const;

    /// Leveled placement: decide the level, then First-Fit within that
    /// level's palette (smallest color index not used by any placed
    /// overlapping interval of the same level). Commits v.
    Step place_leveled(const Interval& v);

    /// Plain First-Fit over all placed intervals; level is recorded as 1.
    Assignment place_first_fit(const Interval& v);

    std::size_t placed_count() const { return entries_.size(); }

private:
    struct Entry {
        Interval iv;
        int level;
        int color;
    };

    void commit(Entry entry);
    template <typename Fn>
    void for_each_neighbor(const Interval& v, Fn&& fn) const;

    std::vector<Entry> entries_;          // arrival order
    std::vector<std::size_t> by_left_;    // entry indices ordered by left endpoint
    Rational max_length_;                 // longest placed interval
};

/// Left-to-right sweep assigning the smallest color whose previous
/// holder no longer overlaps (previous right <= next left). Uses exactly
/// as many colors as the maximum clique.
ColoringResult offline_optimal(const Instance& instance);

/// Feeds the arrival sequence through the chosen algorithm. The trace,
/// when requested, is filled for the leveled colorer only.
ColoringResult run(Algo algo, const Instance& instance,
                   std::vector<TraceRecord>* trace = nullptr);

}  // namespace ktc

#endif  // KTC_COLORERS_HPP
