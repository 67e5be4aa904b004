#include "ktc/verify.hpp"

#include "ktc/clique.hpp"
#include "ktc/colorers.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ktc {

namespace {

// Assignments indexed by interval id, after checking that they cover the
// instance exactly and carry 1-based levels and colors.
std::vector<const Assignment*> assignments_by_id(const Instance& instance,
                                                 const ColoringResult& result) {
    if (result.assignments.size() != instance.size()) {
        throw std::invalid_argument("verify: assignment count does not match the instance");
    }
    std::vector<const Assignment*> by_id(instance.size(), nullptr);
    for (const Assignment& a : result.assignments) {
        if (a.id >= instance.size() || by_id[a.id] != nullptr) {
            throw std::invalid_argument(
                "verify: assignment ids must cover each interval exactly once");
        }
        if (a.level < 1 || a.color < 1) {
            throw std::invalid_argument("verify: levels and colors are 1-based");
        }
        by_id[a.id] = &a;
    }
    return by_id;
}

long long at_least_one(long long limit) { return std::max<long long>(1, limit); }

}  // namespace

bool VerificationReport::all_ok() const {
    if (!proper) return false;
    if (level2_matching.has_value() && !*level2_matching) return false;
    for (const auto& [name, check] : bounds) {
        (void)name;
        if (!check.satisfied) return false;
    }
    return true;
}

VerificationReport check(const Instance& instance, const ColoringResult& result) {
    const std::vector<const Assignment*> by_id = assignments_by_id(instance, result);
    const std::optional<Algo> algo = algo_from_name(result.algorithm);
    if (!algo.has_value()) {
        throw std::invalid_argument("verify: unknown algorithm '" + result.algorithm + "'");
    }
    const int recomputed = count_distinct_colors(result);
    if (recomputed != result.distinct_colors) {
        throw std::invalid_argument("verify: stored distinct_colors is " +
                                    std::to_string(result.distinct_colors) + " but the assignments use " +
                                    std::to_string(recomputed));
    }

    VerificationReport report;
    report.algorithm = result.algorithm;
    report.unit = is_unit(instance);
    report.distinct_colors = result.distinct_colors;
    report.omega = omega(instance.intervals).size;

    // Properness: within each (level, color) class, sweep left to right
    // against the widest-reaching earlier member. Any overlap in the
    // class surfaces as at least one recorded pair.
    std::map<std::pair<int, int>, std::vector<std::size_t>> classes;
    for (std::size_t id = 0; id < instance.size(); ++id) {
        classes[{by_id[id]->level, by_id[id]->color}].push_back(id);
    }
    for (auto& [key, ids] : classes) {
        (void)key;
        std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
            const Interval& x = instance.intervals[a];
            const Interval& y = instance.intervals[b];
            if (auto c = compare(x.left, y.left); c != 0) return c < 0;
            if (auto c = compare(x.right, y.right); c != 0) return c < 0;
            return a < b;
        });
        std::size_t champ = ids.front();
        for (std::size_t k = 1; k < ids.size(); ++k) {
            const std::size_t cur = ids[k];
            if (instance.intervals[cur].left < instance.intervals[champ].right) {
                report.violations.emplace_back(std::min(champ, cur), std::max(champ, cur));
            }
            if (instance.intervals[champ].right < instance.intervals[cur].right) champ = cur;
        }
    }
    std::sort(report.violations.begin(), report.violations.end());
    report.violations.erase(std::unique(report.violations.begin(), report.violations.end()),
                            report.violations.end());
    report.proper = report.violations.empty();

    std::map<int, std::set<int>> palettes;
    for (std::size_t id = 0; id < instance.size(); ++id) {
        palettes[by_id[id]->level].insert(by_id[id]->color);
    }
    for (const auto& [level, colors] : palettes) {
        report.palette_sizes[level] = static_cast<int>(colors.size());
    }
    auto palette_of = [&report](int level) {
        auto it = report.palette_sizes.find(level);
        return it == report.palette_sizes.end() ? 0 : it->second;
    };

    const long long w = static_cast<long long>(report.omega);
    const long long used = report.distinct_colors;
    switch (*algo) {
        case Algo::kt: {
            if (report.unit) {
                const long long limit = at_least_one(3 * w - 3);
                report.bounds["colors_le_3omega_minus_3"] = BoundCheck{limit, used <= limit};
                report.bounds["level2_colors_le_2"] = BoundCheck{2, palette_of(2) <= 2};
                const bool matching = level2_intersections_form_matching(instance, result);
                report.bounds["level2_max_degree_le_1"] = BoundCheck{1, matching};
                report.level2_matching = matching;
            } else {
                const long long limit = at_least_one(3 * w - 2);
                report.bounds["colors_le_3omega_minus_2"] = BoundCheck{limit, used <= limit};
            }
            report.bounds["level1_colors_le_1"] = BoundCheck{1, palette_of(1) <= 1};
            bool upper_ok = true;
            for (const auto& [level, size] : report.palette_sizes) {
                if (level >= 2 && size > 3) upper_ok = false;
            }
            report.bounds["levels_ge2_colors_le_3"] = BoundCheck{3, upper_ok};
            break;
        }
        case Algo::first_fit: {
            if (report.unit) {
                const long long limit = at_least_one(2 * w - 1);
                report.bounds["colors_le_2omega_minus_1"] = BoundCheck{limit, used <= limit};
            }
            break;
        }
        case Algo::offline_optimal: {
            report.bounds["colors_eq_omega"] = BoundCheck{w, used == w};
            break;
        }
    }
    return report;
}

bool level2_intersections_form_matching(const Instance& instance, const ColoringResult& result) {
    if (!is_unit(instance)) {
        throw std::invalid_argument(
            "level2_intersections_form_matching: unit intervals required");
    }
    const std::vector<const Assignment*> by_id = assignments_by_id(instance, result);

    std::vector<std::size_t> members;
    for (std::size_t id = 0; id < instance.size(); ++id) {
        if (by_id[id]->level == 2) members.push_back(id);
    }
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
        if (auto c = compare(instance.intervals[a].left, instance.intervals[b].left); c != 0) {
            return c < 0;
        }
        return a < b;
    });

    // Unit intervals sorted by left overlap exactly when their lefts are
    // less than 1 apart, so a sliding window counts each one's partners.
    const Rational one(1);
    std::vector<int> degree(members.size(), 0);
    std::size_t lo = 0;
    for (std::size_t j = 0; j < members.size(); ++j) {
        const Rational& lj = instance.intervals[members[j]].left;
        while (lo < j && !(lj - instance.intervals[members[lo]].left < one)) ++lo;
        if (j - lo >= 2) return false;
        if (j - lo == 1) {
            if (++degree[j] > 1) return false;
            if (++degree[j - 1] > 1) return false;
        }
    }
    return true;
}

std::size_t exact_chromatic_number(const Instance& instance, std::size_t limit) {
    const std::size_t n = instance.size();
    if (n > limit) {
        throw std::invalid_argument("exact_chromatic_number: instance exceeds the search limit of " +
                                    std::to_string(limit) + " intervals");
    }
    if (n == 0) return 0;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Interval& x = instance.intervals[a];
        const Interval& y = instance.intervals[b];
        if (auto c = compare(x.left, y.left); c != 0) return c < 0;
        if (auto c = compare(x.right, y.right); c != 0) return c < 0;
        return a < b;
    });
    std::vector<char> adj(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (intersects(instance.intervals[order[a]], instance.intervals[order[b]])) {
                adj[a * n + b] = 1;
                adj[b * n + a] = 1;
            }
        }
    }

    // Backtracking over canonical colorings: a vertex may open at most
    // one color beyond those already in use.
    std::vector<int> color(n, 0);
    std::size_t best = n;
    auto dfs = [&](auto&& self, std::size_t v, int used) -> void {
        if (static_cast<std::size_t>(used) >= best) return;
        if (v == n) {
            best = static_cast<std::size_t>(used);
            return;
        }
        for (int c = 1; c <= used + 1; ++c) {
            bool free = true;
            for (std::size_t u = 0; u < v; ++u) {
                if (adj[v * n + u] != 0 && color[u] == c) {
                    free = false;
                    break;
                }
            }
            if (!free) continue;
            color[v] = c;
            self(self, v + 1, std::max(used, c));
            color[v] = 0;
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

std::string render_report_json(const VerificationReport& report) {
    nlohmann::json j;
    j["algorithm"] = report.algorithm;
    j["unit"] = report.unit;
    j["proper"] = report.proper;
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& [a, b] : report.violations) {
        violations.push_back(nlohmann::json::array({a, b}));
    }
    j["violations"] = violations;
    j["distinct_colors"] = report.distinct_colors;
    j["omega"] = report.omega;
    nlohmann::json palettes = nlohmann::json::object();
    for (const auto& [level, count] : report.palette_sizes) {
        palettes[std::to_string(level)] = count;
    }
    j["palette_sizes"] = palettes;
    if (report.level2_matching.has_value()) {
        j["level2_matching"] = *report.level2_matching;
    }
    nlohmann::json bounds = nlohmann::json::object();
    for (const auto& [name, check] : report.bounds) {
        bounds[name] = {{"limit", check.limit}, {"satisfied", check.satisfied}};
    }
    j["bounds"] = bounds;
    j["ok"] = report.all_ok();
    return j.dump(2) + "\n";
}

}  // namespace ktc
