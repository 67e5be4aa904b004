#include "ktc/model.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ktc {

using nlohmann::json;

Instance make_instance(std::vector<Interval> intervals) {
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const Interval& iv = intervals[i];
        if (iv.id != i) {
            throw std::invalid_argument("interval ids must be contiguous arrival indices: expected " +
                                        std::to_string(i) + ", got " + std::to_string(iv.id));
        }
        if (!(iv.left < iv.right)) {
            throw std::invalid_argument("interval " + std::to_string(i) +
                                        " has non-positive length: [" + iv.left.to_string() +
                                        ", " + iv.right.to_string() + "]");
        }
    }
    return Instance{std::move(intervals)};
}

bool is_unit(const Instance& instance) {
    return std::all_of(instance.intervals.begin(), instance.intervals.end(),
                       [](const Interval& iv) { return iv.length() == Rational(1); });
}

int count_distinct_colors(const ColoringResult& result) {
    std::set<std::pair<int, int>> seen;
    for (const Assignment& a : result.assignments) {
        seen.emplace(a.level, a.color);
    }
    return static_cast<int>(seen.size());
}

std::string instance_to_jsonl(const Instance& instance) {
    std::string out;
    for (const Interval& iv : instance.intervals) {
        out += "{\"id\":" + std::to_string(iv.id) +
               ",\"left\":\"" + iv.left.to_string() +
               "\",\"right\":\"" + iv.right.to_string() + "\"}\n";
    }
    return out;
}

namespace {

[[noreturn]] void line_error(const std::string& path, std::size_t line_no, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
}

Rational rational_field(const json& obj, const char* key, const std::string& path,
                        std::size_t line_no) {
    if (!obj.contains(key) || !obj[key].is_string()) {
        line_error(path, line_no, std::string("missing or non-string \"") + key + "\" field");
    }
    try {
        return Rational::parse(obj[key].get<std::string>());
    } catch (const std::exception& e) {
        line_error(path, line_no, e.what());
    }
}

}  // namespace

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance file: " + path);
    }
    std::vector<Interval> intervals;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            line_error(path, line_no, "empty line");
        }
        json obj = json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) {
            line_error(path, line_no, "not a JSON object");
        }
        if (obj.size() != 3 || !obj.contains("id") || !obj["id"].is_number_unsigned()) {
            line_error(path, line_no, "expected exactly {\"id\", \"left\", \"right\"} with integer id");
        }
        Interval iv;
        iv.id = obj["id"].get<std::size_t>();
        iv.left = rational_field(obj, "left", path, line_no);
        iv.right = rational_field(obj, "right", path, line_no);
        if (iv.id != intervals.size()) {
            line_error(path, line_no, "non-contiguous id " + std::to_string(iv.id) +
                                          " (expected " + std::to_string(intervals.size()) + ")");
        }
        if (!(iv.left < iv.right)) {
            line_error(path, line_no, "interval has non-positive length");
        }
        intervals.push_back(std::move(iv));
    }
    return Instance{std::move(intervals)};
}

void save_instance(const Instance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write instance file: " + path);
    }
    out << instance_to_jsonl(instance);
    if (!out) {
        throw std::runtime_error("failed writing instance file: " + path);
    }
}

std::string result_to_json(const ColoringResult& result) {
    json doc;
    doc["algorithm"] = result.algorithm;
    doc["distinct_colors"] = result.distinct_colors;
    json arr = json::array();
    for (const Assignment& a : result.assignments) {
        arr.push_back({{"id", a.id}, {"level", a.level}, {"color", a.color}});
    }
    doc["assignments"] = std::move(arr);
    return doc.dump(2) + "\n";
}

ColoringResult load_result(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open result file: " + path);
    }
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw std::runtime_error("result file is not a JSON object: " + path);
    }
    auto fail = [&](const std::string& what) -> void {
        throw std::runtime_error("malformed result file " + path + ": " + what);
    };
    if (!doc.contains("algorithm") || !doc["algorithm"].is_string()) fail("missing algorithm");
    if (!doc.contains("distinct_colors") || !doc["distinct_colors"].is_number_integer()) {
        fail("missing distinct_colors");
    }
    if (!doc.contains("assignments") || !doc["assignments"].is_array()) fail("missing assignments");
    ColoringResult result;
    result.algorithm = doc["algorithm"].get<std::string>();
    result.distinct_colors = doc["distinct_colors"].get<int>();
    for (const json& item : doc["assignments"]) {
        if (!item.is_object() || !item.contains("id") || !item["id"].is_number_unsigned() ||
            !item.contains("level") || !item["level"].is_number_integer() ||
            !item.contains("color") || !item["color"].is_number_integer()) {
            fail("assignment entries need integer id, level, color");
        }
        Assignment a{item["id"].get<std::size_t>(), item["level"].get<int>(),
                     item["color"].get<int>()};
        if (a.level < 1 || a.color < 1) {
            fail("levels and colors are 1-based positive integers");
        }
        result.assignments.push_back(a);
    }
    std::sort(result.assignments.begin(), result.assignments.end(),
              [](const Assignment& a, const Assignment& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < result.assignments.size(); ++i) {
        if (result.assignments[i].id != i) {
            fail("assignment ids must cover 0..n-1 exactly once");
        }
    }
    return result;
}

void save_result(const ColoringResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write result file: " + path);
    }
    out << result_to_json(result);
    if (!out) {
        throw std::runtime_error("failed writing result file: " + path);
    }
}

}  // namespace ktc
