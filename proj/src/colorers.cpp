#include "ktc/colorers.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace ktc {

namespace {

// Smallest positive integer absent from `taken`. Colors handed out by the
// callers are always in 1..taken.size()+1, so a flat table suffices.
int smallest_free_color(const std::vector<int>& taken) {
    std::vector<char> used(taken.size() + 2, 0);
    for (int c : taken) {
        if (c >= 1 && static_cast<std::size_t>(c) <= taken.size() + 1) used[static_cast<std::size_t>(c)] = 1;
    }
    int c = 1;
    while (used[static_cast<std::size_t>(c)]) ++c;
    return c;
}

}  // namespace

std::string_view algo_name(Algo algo) {
    switch (algo) {
        case Algo::kt: return "kt";
        case Algo::first_fit: return "first_fit";
        case Algo::offline_optimal: return "offline_optimal";
    }
    return "kt";
}

std::optional<Algo> algo_from_name(std::string_view name) {
    if (name == "kt") return Algo::kt;
    if (name == "first_fit") return Algo::first_fit;
    if (name == "offline_optimal") return Algo::offline_optimal;
    return std::nullopt;
}

std::optional<Algo> algo_from_token(std::string_view token) {
    if (token == "kt") return Algo::kt;
    if (token == "ff") return Algo::first_fit;
    if (token == "opt") return Algo::offline_optimal;
    return std::nullopt;
}

template <typename Fn>
void OnlineColorer::for_each_neighbor(const Interval& v, Fn&& fn) const {
    // Entries with left <= v.left - max_length_ end at or before v.left and
    // cannot overlap v, so the scan starts past them.
    const Rational cutoff = v.left - max_length_;
    auto it = std::upper_bound(
        by_left_.begin(), by_left_.end(), cutoff,
        [this](const Rational& val, std::size_t idx) { return val < entries_[idx].iv.left; });
    for (; it != by_left_.end(); ++it) {
        const Entry& e = entries_[*it];
        if (!(e.iv.left < v.right)) break;
        if (v.left < e.iv.right) fn(e);
    }
}

OnlineColorer::LevelDecision OnlineColorer::level_of(const Interval& v) const {
    std::vector<const Entry*> neighbors;
    for_each_neighbor(v, [&](const Entry& e) { neighbors.push_back(&e); });

    // A clique containing v sits at the maximum of its members' left
    // endpoints, which lands in [v.left, v.right). Those are the only
    // points worth scanning.
    std::vector<Rational> points;
    points.reserve(neighbors.size() + 1);
    points.push_back(v.left);
    for (const Entry* e : neighbors) {
        if (v.left < e->iv.left) points.push_back(e->iv.left);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t npts = points.size();

    int max_level = 1;
    for (const Entry* e : neighbors) max_level = std::max(max_level, e->level);

    // coverage[l-1][i]: how many placed level-l neighbors cover points[i].
    std::vector<std::vector<int>> coverage(
        static_cast<std::size_t>(max_level), std::vector<int>(npts + 1, 0));
    for (const Entry* e : neighbors) {
        auto& row = coverage[static_cast<std::size_t>(e->level - 1)];
        const std::size_t lo = static_cast<std::size_t>(
            std::lower_bound(points.begin(), points.end(), e->iv.left) - points.begin());
        const std::size_t hi = static_cast<std::size_t>(
            std::lower_bound(points.begin(), points.end(), e->iv.right) - points.begin());
        if (lo < hi) {
            row[lo] += 1;
            row[hi] -= 1;
        }
    }
    for (auto& row : coverage) {
        int running = 0;
        for (std::size_t i = 0; i < npts; ++i) {
            running += row[i];
            row[i] = running;
        }
    }

    // cum[i] accumulates coverage by neighbors of level <= j as j grows;
    // the chosen level is the first j whose densest point stays below it.
    std::vector<int> cum(npts, 0);
    for (int j = 1;; ++j) {
        if (j <= max_level) {
            const auto& row = coverage[static_cast<std::size_t>(j - 1)];
            for (std::size_t i = 0; i < npts; ++i) cum[i] += row[i];
        }
        int best = 0;
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < npts; ++i) {
            if (cum[i] > best) {
                best = cum[i];
                best_i = i;
            }
        }
        if (1 + best <= j) {
            LevelDecision decision;
            decision.level = j;
            decision.witness_point = points[best_i];
            decision.witness_size = static_cast<std::size_t>(best) + 1;
            return decision;
        }
    }
}

OnlineColorer::Step OnlineColorer::place_leveled(const Interval& v) {
    const LevelDecision decision = level_of(v);
    std::vector<int> taken;
    for_each_neighbor(v, [&](const Entry& e) {
        if (e.level == decision.level) taken.push_back(e.color);
    });
    const int color = smallest_free_color(taken);
    commit(Entry{v, decision.level, color});

    Step step;
    step.assignment = Assignment{v.id, decision.level, color};
    step.witness_point = decision.witness_point;
    step.witness_size = decision.witness_size;
    return step;
}

Assignment OnlineColorer::place_first_fit(const Interval& v) {
    std::vector<int> taken;
    for_each_neighbor(v, [&](const Entry& e) { taken.push_back(e.color); });
    const int color = smallest_free_color(taken);
    commit(Entry{v, 1, color});
    return Assignment{v.id, 1, color};
}

void OnlineColorer::commit(Entry entry) {
    const Rational len = entry.iv.length();
    if (max_length_ < len) max_length_ = len;
    auto pos = std::upper_bound(
        by_left_.begin(), by_left_.end(), entry.iv.left,
        [this](const Rational& val, std::size_t idx) { return val < entries_[idx].iv.left; });
    const std::size_t idx = entries_.size();
    entries_.push_back(std::move(entry));
    by_left_.insert(pos, idx);
}

ColoringResult offline_optimal(const Instance& instance) {
    std::vector<std::size_t> order(instance.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Interval& x = instance.intervals[a];
        const Interval& y = instance.intervals[b];
        if (auto c = compare(x.left, y.left); c != 0) return c < 0;
        if (auto c = compare(x.right, y.right); c != 0) return c < 0;
        return x.id < y.id;
    });

    // busy_until[c]: right endpoint of the latest interval holding color
    // c+1. A color is reusable once that interval has closed; a new color
    // is opened only when every existing one is still busy, which pins the
    // color count to the maximum clique size.
    std::vector<Rational> busy_until;
    std::vector<Assignment> assignments(instance.size());
    for (std::size_t k : order) {
        const Interval& v = instance.intervals[k];
        std::size_t c = 0;
        while (c < busy_until.size() && v.left < busy_until[c]) ++c;
        if (c == busy_until.size()) busy_until.emplace_back();
        busy_until[c] = v.right;
        assignments[v.id] = Assignment{v.id, 1, static_cast<int>(c) + 1};
    }

    ColoringResult result;
    result.algorithm = std::string(algo_name(Algo::offline_optimal));
    result.assignments = std::move(assignments);
    result.distinct_colors = count_distinct_colors(result);
    return result;
}

ColoringResult run(Algo algo, const Instance& instance, std::vector<TraceRecord>* trace) {
    if (trace != nullptr) trace->clear();
    if (algo == Algo::offline_optimal) return offline_optimal(instance);

    OnlineColorer state;
    ColoringResult result;
    result.algorithm = std::string(algo_name(algo));
    result.assignments.reserve(instance.size());
    for (const Interval& v : instance.intervals) {
        if (algo == Algo::kt) {
            const OnlineColorer::Step step = state.place_leveled(v);
            result.assignments.push_back(step.assignment);
            if (trace != nullptr) {
                trace->push_back(TraceRecord{v.id, step.assignment.level, step.assignment.color,
                                             step.witness_point, step.witness_size});
            }
        } else {
            result.assignments.push_back(state.place_first_fit(v));
        }
    }
    result.distinct_colors = count_distinct_colors(result);
    return result;
}

}  // namespace ktc
