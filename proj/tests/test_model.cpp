#include "ktc/model.hpp"

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using ktc::Assignment;
using ktc::ColoringResult;
using ktc::Instance;
using ktc::Interval;
using ktc::Rational;

namespace {

Interval iv(std::size_t id, const char* left, const char* right) {
    return Interval{id, Rational::parse(left), Rational::parse(right)};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ktc_model_test_" + name);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(static_cast<bool>(out));
    out << content;
}

std::string message_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("overlap needs a positive-length intersection") {
    CHECK_FALSE(ktc::intersects(iv(0, "0", "1"), iv(1, "1", "2")));
    CHECK_FALSE(ktc::intersects(iv(0, "1", "2"), iv(1, "0", "1")));
    CHECK(ktc::intersects(iv(0, "0", "1"), iv(1, "1/2", "3/2")));
    CHECK(ktc::intersects(iv(0, "1/2", "3/2"), iv(1, "0", "1")));
    CHECK(ktc::intersects(iv(0, "0", "2"), iv(1, "1/2", "1")));
    CHECK(ktc::intersects(iv(0, "1/2", "1"), iv(1, "0", "2")));
    CHECK_FALSE(ktc::intersects(iv(0, "0", "1"), iv(1, "2", "3")));
    const Interval self = iv(0, "1/3", "4/3");
    CHECK(ktc::intersects(self, self));
}

TEST_CASE("unit intervals overlap exactly when lefts are less than 1 apart") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const long long ka = static_cast<long long>(rng() % 41);
        const long long kb = static_cast<long long>(rng() % 41);
        const Interval a{0, Rational(ktc::BigInt(ka), ktc::BigInt(8)),
                         Rational(ktc::BigInt(ka + 8), ktc::BigInt(8))};
        const Interval b{1, Rational(ktc::BigInt(kb), ktc::BigInt(8)),
                         Rational(ktc::BigInt(kb + 8), ktc::BigInt(8))};
        const bool close = (ka > kb ? ka - kb : kb - ka) < 8;
        CHECK(ktc::intersects(a, b) == close);
    }
}

TEST_CASE("make_instance validates ids and lengths") {
    CHECK_NOTHROW(ktc::make_instance({iv(0, "0", "1"), iv(1, "1", "2")}));
    CHECK_THROWS_AS(ktc::make_instance({iv(1, "0", "1")}), std::invalid_argument);
    CHECK_THROWS_AS(ktc::make_instance({iv(0, "0", "1"), iv(2, "1", "2")}), std::invalid_argument);
    CHECK_THROWS_AS(ktc::make_instance({iv(0, "1", "1")}), std::invalid_argument);
    CHECK_THROWS_AS(ktc::make_instance({iv(0, "2", "1")}), std::invalid_argument);
    CHECK(ktc::make_instance({}).empty());
}

TEST_CASE("is_unit") {
    CHECK(ktc::is_unit(ktc::make_instance({iv(0, "1/3", "4/3"), iv(1, "2", "3")})));
    CHECK_FALSE(ktc::is_unit(ktc::make_instance({iv(0, "0", "1"), iv(1, "0", "1/2")})));
    CHECK(ktc::is_unit(ktc::make_instance({})));
}

TEST_CASE("count_distinct_colors counts level and color pairs") {
    ColoringResult result;
    result.assignments = {Assignment{0, 1, 1}, Assignment{1, 2, 1}, Assignment{2, 1, 1}};
    CHECK(ktc::count_distinct_colors(result) == 2);
    result.assignments.push_back(Assignment{3, 2, 2});
    CHECK(ktc::count_distinct_colors(result) == 3);
    CHECK(ktc::count_distinct_colors(ColoringResult{}) == 0);
}

TEST_CASE("instance serialization is one object per line") {
    const Instance instance = ktc::make_instance({iv(0, "0", "1"), iv(1, "1/3", "4/3")});
    CHECK(ktc::instance_to_jsonl(instance) ==
          "{\"id\":0,\"left\":\"0\",\"right\":\"1\"}\n"
          "{\"id\":1,\"left\":\"1/3\",\"right\":\"4/3\"}\n");
}

TEST_CASE("instance files round trip") {
    std::vector<Interval> intervals;
    std::mt19937_64 rng(9);
    for (std::size_t i = 0; i < 13; ++i) {
        const long long k = static_cast<long long>(rng() % 100);
        const long long m = 1 + static_cast<long long>(rng() % 24);
        intervals.push_back(Interval{i, Rational(ktc::BigInt(k), ktc::BigInt(12)),
                                     Rational(ktc::BigInt(k + m), ktc::BigInt(12))});
    }
    const Instance instance = ktc::make_instance(std::move(intervals));
    const auto path = temp_file("round_trip.jsonl");
    ktc::save_instance(instance, path.string());
    const Instance loaded = ktc::load_instance(path.string());
    CHECK(ktc::instance_to_jsonl(loaded) == ktc::instance_to_jsonl(instance));
    std::filesystem::remove(path);
}

TEST_CASE("instance loading reports the offending line") {
    const auto check_error = [](const std::string& name, const std::string& content,
                                const std::string& needle) {
        const auto path = temp_file(name);
        write_file(path, content);
        CHECK_THROWS_AS((void)ktc::load_instance(path.string()), std::runtime_error);
        const std::string msg =
            message_of([&]() { (void)ktc::load_instance(path.string()); });
        CHECK(msg.find(needle) != std::string::npos);
        std::filesystem::remove(path);
    };
    check_error("empty_line.jsonl",
                "{\"id\":0,\"left\":\"0\",\"right\":\"1\"}\n\n", ":2");
    check_error("bad_json.jsonl", "{\"id\":0,\n", ":1");
    check_error("gap.jsonl",
                "{\"id\":0,\"left\":\"0\",\"right\":\"1\"}\n"
                "{\"id\":2,\"left\":\"1\",\"right\":\"2\"}\n",
                "non-contiguous id 2");
    check_error("extra_key.jsonl",
                "{\"id\":0,\"left\":\"0\",\"right\":\"1\",\"color\":3}\n", ":1");
    check_error("bad_rational.jsonl", "{\"id\":0,\"left\":\"0.5\",\"right\":\"1\"}\n",
                "malformed rational");
    check_error("zero_length.jsonl", "{\"id\":0,\"left\":\"1\",\"right\":\"1\"}\n",
                "non-positive length");
    check_error("numeric_left.jsonl", "{\"id\":0,\"left\":0.5,\"right\":\"1\"}\n",
                "non-string");
    CHECK_THROWS_AS((void)ktc::load_instance(temp_file("does_not_exist.jsonl").string()),
                    std::runtime_error);
}

TEST_CASE("result files round trip") {
    ColoringResult result;
    result.algorithm = "kt";
    result.assignments = {Assignment{0, 1, 1}, Assignment{1, 2, 1}, Assignment{2, 3, 2}};
    result.distinct_colors = 3;
    const auto path = temp_file("result.json");
    ktc::save_result(result, path.string());
    const ColoringResult loaded = ktc::load_result(path.string());
    CHECK(loaded.algorithm == result.algorithm);
    CHECK(loaded.distinct_colors == result.distinct_colors);
    REQUIRE(loaded.assignments.size() == result.assignments.size());
    for (std::size_t i = 0; i < loaded.assignments.size(); ++i) {
        CHECK(loaded.assignments[i].id == result.assignments[i].id);
        CHECK(loaded.assignments[i].level == result.assignments[i].level);
        CHECK(loaded.assignments[i].color == result.assignments[i].color);
    }
    std::filesystem::remove(path);
}

TEST_CASE("result loading validates structure") {
    const auto check_error = [](const std::string& name, const std::string& content) {
        const auto path = temp_file(name);
        write_file(path, content);
        CHECK_THROWS_AS((void)ktc::load_result(path.string()), std::runtime_error);
        std::filesystem::remove(path);
    };
    check_error("not_object.json", "[1,2]\n");
    check_error("no_algorithm.json", "{\"distinct_colors\":1,\"assignments\":[]}\n");
    check_error("zero_color.json",
                "{\"algorithm\":\"kt\",\"distinct_colors\":1,"
                "\"assignments\":[{\"id\":0,\"level\":1,\"color\":0}]}\n");
    check_error("duplicate_id.json",
                "{\"algorithm\":\"kt\",\"distinct_colors\":1,"
                "\"assignments\":[{\"id\":0,\"level\":1,\"color\":1},"
                "{\"id\":0,\"level\":1,\"color\":2}]}\n");
    check_error("id_gap.json",
                "{\"algorithm\":\"kt\",\"distinct_colors\":1,"
                "\"assignments\":[{\"id\":1,\"level\":1,\"color\":1}]}\n");
}

TEST_CASE("loaded results come back sorted by id") {
    const auto path = temp_file("unsorted.json");
    write_file(path,
               "{\"algorithm\":\"kt\",\"distinct_colors\":2,"
               "\"assignments\":[{\"id\":1,\"level\":2,\"color\":1},"
               "{\"id\":0,\"level\":1,\"color\":1}]}\n");
    const ColoringResult loaded = ktc::load_result(path.string());
    REQUIRE(loaded.assignments.size() == 2);
    CHECK(loaded.assignments[0].id == 0);
    CHECK(loaded.assignments[0].level == 1);
    CHECK(loaded.assignments[1].id == 1);
    CHECK(loaded.assignments[1].level == 2);
    std::filesystem::remove(path);
}
