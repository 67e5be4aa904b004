#include "ktc/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ktc {

namespace {

constexpr long long kGrid = 1000;

// floor(a / b) for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// Largest k with k / kGrid <= value. Values are kept small enough that
// the count fits comfortably in 64 bits.
std::uint64_t grid_steps(const Rational& value, const char* what) {
    const BigInt k = floor_div(value.num() * kGrid, value.den());
    if (k < 0) {
        throw std::invalid_argument(std::string(what) + " leaves no room on the 1/1000 grid");
    }
    if (k > BigInt(1000000000000000LL)) {
        throw std::invalid_argument(std::string(what) + " is too large");
    }
    return k.convert_to<std::uint64_t>();
}

}  // namespace

Instance tight_unit_instance(int clique_size) {
    if (clique_size < 3) {
        throw std::invalid_argument("tight_unit_instance: clique_size must be at least 3");
    }
    const long long x = clique_size;

    std::vector<Interval> intervals;
    intervals.reserve(static_cast<std::size_t>((x + 1) * (x + 2) / 2 + x));
    auto add = [&intervals](Rational left) {
        const std::size_t id = intervals.size();
        Rational right = left + Rational(1);
        intervals.push_back(Interval{id, std::move(left), std::move(right)});
    };

    // Opening run: x + 2 intervals marching right in steps of 1 - 1/x.
    // Consecutive ones overlap, so the levels alternate 1, 2, 1, 2, ...
    // while no point is covered more than twice.
    for (long long i = 1; i <= x + 2; ++i) {
        add(Rational((i - 1) * (x - 1), x));
    }

    // Waves: wave j shifts the opening run right by (j - 1)/x and lands
    // every member on level j + 1. Positions 3 and 4 arrive swapped,
    // which costs the level a third color.
    for (long long j = 2; j <= x - 1; ++j) {
        const long long members = x - j + 3;
        for (long long a = 1; a <= members; ++a) {
            long long i = a;
            if (a == 3) {
                i = 4;
            } else if (a == 4) {
                i = 3;
            }
            add(Rational((i - 1) * (x - 1) + (j - 1), x));
        }
    }

    // Closing quartet past the run: two fresh level-1 intervals, then two
    // arrivals pinned to level 2 that cannot share a color.
    const Rational base((x + 1) * (x - 1), x);
    add(base + Rational(x + 1, x));
    add(base + Rational(2 * x + 2, x));
    add(base + Rational(x + 2, x));
    add(base + Rational(2 * x + 1, x));

    return make_instance(std::move(intervals));
}

Instance random_unit_instance(std::size_t n, std::uint64_t seed, const Rational& span) {
    if (span < Rational(1)) {
        throw std::invalid_argument("random_unit_instance: span must be at least 1");
    }
    const std::uint64_t slots = grid_steps(span - Rational(1), "span") + 1;

    // Raw mt19937_64 output reduced by modulo: the stream is pinned by the
    // standard, so the instance is identical across platforms.
    std::mt19937_64 rng(seed);
    std::vector<Interval> intervals;
    intervals.reserve(n);
    for (std::size_t id = 0; id < n; ++id) {
        const std::uint64_t k = rng() % slots;
        Rational left{BigInt(k), BigInt(kGrid)};
        Rational right = left + Rational(1);
        intervals.push_back(Interval{id, std::move(left), std::move(right)});
    }
    return make_instance(std::move(intervals));
}

Instance random_general_instance(std::size_t n, std::uint64_t seed, const Rational& span,
                                 const Rational& max_len) {
    const Rational grid(1, kGrid);
    if (span < grid) {
        throw std::invalid_argument("random_general_instance: span must be at least 1/1000");
    }
    if (max_len < grid) {
        throw std::invalid_argument("random_general_instance: max_len must be at least 1/1000");
    }
    const std::uint64_t left_slots = grid_steps(span - grid, "span") + 1;

    std::mt19937_64 rng(seed);
    std::vector<Interval> intervals;
    intervals.reserve(n);
    for (std::size_t id = 0; id < n; ++id) {
        const std::uint64_t k = rng() % left_slots;
        Rational left{BigInt(k), BigInt(kGrid)};

        Rational cap = span - left;
        if (max_len < cap) cap = max_len;
        const std::uint64_t len_slots = grid_steps(cap, "max_len");
        const std::uint64_t m = 1 + rng() % len_slots;

        Rational right = left + Rational(BigInt(m), BigInt(kGrid));
        intervals.push_back(Interval{id, std::move(left), std::move(right)});
    }
    return make_instance(std::move(intervals));
}

}  // namespace ktc
