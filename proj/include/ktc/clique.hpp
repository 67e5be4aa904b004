#ifndef KTC_CLIQUE_HPP
#define KTC_CLIQUE_HPP

#include "ktc/model.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ktc {

/// A maximum clique realized at a point: by the Helly property a set of
/// pairwise overlapping intervals has a common point, so clique queries
/// reduce to coverage counting at finitely many candidate points.
struct CliqueWitness {
    std::size_t size = 0;
    Rational point;                        // meaningful when size > 0
    std::vector<std::size_t> member_ids;   // sorted; each member contains point
};

/// Maximum clique over the whole set. Endpoint event sweep; closings are
/// processed before openings at equal coordinates so touching intervals
/// are never counted as co-active (strict-overlap adjacency). Empty
/// input yields size 0.
CliqueWitness omega(std::span<const Interval> intervals);

/// Maximum clique containing v among the given intervals plus v itself.
/// Candidate points are clipped to v's span and v always counts, so the
/// size is >= 1.
/// Entries sharing v's id are ignored, so v may already be in the set.
CliqueWitness omega_containing(std::span<const Interval> intervals, const Interval& v);

}  // namespace ktc

#endif  // KTC_CLIQUE_HPP
