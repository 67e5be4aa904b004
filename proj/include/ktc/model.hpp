#ifndef KTC_MODEL_HPP
#define KTC_MODEL_HPP

#include "ktc/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ktc {

/// A closed interval [left, right] with strictly positive length.
/// The id is the 0-based arrival index, not a user label.
struct Interval {
    std::size_t id = 0;
    Rational left;
    Rational right;

    Rational length() const { return right - left; }
};

/// Strict overlap: the intersection must have positive length, so
/// touching endpoints ([0,1] and [1,2]) do not conflict. Symmetric,
/// and reflexive for any valid (positive-length) interval.
inline bool intersects(const Interval& a, const Interval& b) {
    return a.left < b.right && b.left < a.right;
}

/// An ordered arrival sequence; ids are 0..n-1 in sequence order.
struct Instance {
    std::vector<Interval> intervals;

    std::size_t size() const { return intervals.size(); }
    bool empty() const { return intervals.empty(); }
};

/// Validates id contiguity and positive lengths.
/// Throws std::invalid_argument on violation.
Instance make_instance(std::vector<Interval> intervals);

bool is_unit(const Instance& instance);

struct Assignment {
    std::size_t id = 0;
    int level = 1;
    int color = 1;
};

/// A global color is the (level, color) pair; per-level palettes are
/// disjoint by construction. Algorithms without levels record level 1.
struct ColoringResult {
    std::string algorithm;
    std::vector<Assignment> assignments;  // one per interval, in id order
    int distinct_colors = 0;
};

/// Number of distinct (level, color) pairs among the assignments.
int count_distinct_colors(const ColoringResult& result);

// Instance files are JSON Lines: one {"id":i,"left":"p/q","right":"p/q"}
// object per line, arrival order = line order. Results are a single JSON
// document {algorithm, assignments:[{id,level,color}], distinct_colors}.

std::string instance_to_jsonl(const Instance& instance);
Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

std::string result_to_json(const ColoringResult& result);
ColoringResult load_result(const std::string& path);
void save_result(const ColoringResult& result, const std::string& path);

}  // namespace ktc

#endif  // KTC_MODEL_HPP
