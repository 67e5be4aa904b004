#ifndef KTC_GENERATORS_HPP
#define KTC_GENERATORS_HPP

#include "ktc/model.hpp"

#include <cstdint>

namespace ktc {

/// Arrival sequence of unit intervals whose maximum clique is exactly
/// `clique_size` and which forces the leveled online colorer to spend
/// 3 * clique_size - 3 colors: one on the first level, two on the second,
/// three on each level above. Requires clique_size >= 3; the sequence has
/// (clique_size + 1) * (clique_size + 2) / 2 + clique_size intervals.
Instance tight_unit_instance(int clique_size);

/// n unit intervals with left endpoints drawn uniformly from the
/// multiples of 1/1000 in [0, span - 1]. The same seed yields the same
/// instance on every platform. Requires span >= 1.
Instance random_unit_instance(std::size_t n, std::uint64_t seed, const Rational& span);

/// n intervals inside [0, span]. Left endpoints and lengths live on the
/// 1/1000 grid; each length is drawn after its left endpoint from
/// [1/1000, min(max_len, span - left)]. Requires span >= 1/1000 and
/// max_len >= 1/1000.
Instance random_general_instance(std::size_t n, std::uint64_t seed, const Rational& span,
                                 const Rational& max_len);

}  // namespace ktc

#endif  // KTC_GENERATORS_HPP
