#include "ktc/clique.hpp"

#include <algorithm>

namespace ktc {

namespace {

// Coverage uses half-open spans [left, right): an interval whose right
// endpoint equals p is not active at p, matching strict-overlap adjacency.
bool covers(const Interval& iv, const Rational& p) {
    return !(p < iv.left) && p < iv.right;
}

std::vector<std::size_t> members_at(std::span<const Interval> intervals, const Rational& p) {
    std::vector<std::size_t> ids;
    for (const Interval& iv : intervals) {
        if (covers(iv, p)) {
            ids.push_back(iv.id);
        }
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace

CliqueWitness omega(std::span<const Interval> intervals) {
    if (intervals.empty()) {
        return {};
    }
    struct Event {
        const Rational* coord;
        bool open;
    };
    std::vector<Event> events;
    events.reserve(intervals.size() * 2);
    for (const Interval& iv : intervals) {
        events.push_back({&iv.left, true});
        events.push_back({&iv.right, false});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (*a.coord != *b.coord) return *a.coord < *b.coord;
        return a.open < b.open;  // closings first
    });

    std::size_t active = 0;
    std::size_t best = 0;
    const Rational* best_point = events.front().coord;
    for (const Event& ev : events) {
        if (ev.open) {
            ++active;
            if (active > best) {
                best = active;
                best_point = ev.coord;
            }
        } else {
            --active;
        }
    }

    CliqueWitness witness;
    witness.size = best;
    witness.point = *best_point;
    witness.member_ids = members_at(intervals, witness.point);
    return witness;
}

CliqueWitness omega_containing(std::span<const Interval> intervals, const Interval& v) {
    std::vector<const Interval*> others;
    for (const Interval& iv : intervals) {
        if (iv.id != v.id && intersects(iv, v)) {
            others.push_back(&iv);
        }
    }

    // Candidate points: v.left plus every overlapping left endpoint
    // strictly inside v's span.
    std::vector<const Rational*> points;
    points.push_back(&v.left);
    for (const Interval* u : others) {
        if (v.left < u->left) {
            points.push_back(&u->left);
        }
    }

    std::size_t best = 0;
    const Rational* best_point = &v.left;
    for (const Rational* p : points) {
        std::size_t count = 1;  // v itself
        for (const Interval* u : others) {
            if (covers(*u, *p)) {
                ++count;
            }
        }
        if (count > best || (count == best && *p < *best_point)) {
            best = count;
            best_point = p;
        }
    }

    CliqueWitness witness;
    witness.size = best;
    witness.point = *best_point;
    for (const Interval* u : others) {
        if (covers(*u, witness.point)) {
            witness.member_ids.push_back(u->id);
        }
    }
    witness.member_ids.push_back(v.id);
    std::sort(witness.member_ids.begin(), witness.member_ids.end());
    return witness;
}

}  // namespace ktc
