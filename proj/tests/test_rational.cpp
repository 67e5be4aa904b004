#include "ktc/rational.hpp"

#include "doctest.h"

#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

using ktc::BigInt;
using ktc::Rational;

namespace {

Rational rat(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

std::vector<Rational> sample_rationals(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const long long num = static_cast<long long>(rng() % 101) - 50;
        const long long den = static_cast<long long>(rng() % 30) + 1;
        out.push_back(rat(num, den));
    }
    return out;
}

}  // namespace

TEST_CASE("construction reduces to canonical form") {
    CHECK(Rational().num() == 0);
    CHECK(Rational().den() == 1);
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(2, 4).num() == 1);
    CHECK(rat(2, 4).den() == 2);
    CHECK(rat(1, -2).num() == -1);
    CHECK(rat(1, -2).den() == 2);
    CHECK(rat(-4, -6) == rat(2, 3));
    CHECK(rat(0, 5).num() == 0);
    CHECK(rat(0, 5).den() == 1);
    CHECK(Rational(7).is_integer());
    CHECK(Rational(-3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(rat(1, 3).sign() == 1);
    CHECK_THROWS_AS(rat(3, 0), std::domain_error);
}

TEST_CASE("parse accepts p and p/q") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/9") == rat(-1, 3));
    CHECK(Rational::parse("22/7") == rat(22, 7));
    CHECK(Rational::parse("0/9") == Rational(0));
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK(Rational::parse("1000000000000000000000/3") ==
          Rational(BigInt("1000000000000000000000"), BigInt(3)));
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("-"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("2/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1 "), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("+1"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("to_string round trips through parse") {
    CHECK(rat(-1, 3).to_string() == "-1/3");
    CHECK(Rational(5).to_string() == "5");
    CHECK(rat(10, 4).to_string() == "5/2");
    for (const Rational& r : sample_rationals(200, 11)) {
        CHECK(Rational::parse(r.to_string()) == r);
    }
    std::ostringstream os;
    os << rat(5, 3);
    CHECK(os.str() == "5/3");
}

TEST_CASE("arithmetic on fixed cases") {
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
    CHECK(rat(1, 2) - rat(1, 3) == rat(1, 6));
    CHECK(rat(2, 3) * rat(3, 4) == rat(1, 2));
    CHECK(-rat(1, 2) == rat(-1, 2));
    CHECK(rat(1, 2) + rat(1, 2) == Rational(1));
    CHECK(rat(1, 3) - rat(1, 3) == Rational(0));
    Rational acc = Rational(1);
    acc += rat(1, 2);
    acc -= rat(1, 3);
    acc *= Rational(6);
    CHECK(acc == Rational(7));
}

TEST_CASE("arithmetic laws hold on samples") {
    const std::vector<Rational> pool = sample_rationals(60, 23);
    for (std::size_t i = 0; i + 2 < pool.size(); i += 3) {
        const Rational& a = pool[i];
        const Rational& b = pool[i + 1];
        const Rational& c = pool[i + 2];
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
    }
}

TEST_CASE("ordering matches the sign of the difference") {
    CHECK(rat(1, 3) < rat(1, 2));
    CHECK(rat(-1, 2) < rat(-1, 3));
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(Rational(2) > rat(5, 3));
    const std::vector<Rational> pool = sample_rationals(80, 37);
    for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
        const Rational& a = pool[i];
        const Rational& b = pool[i + 1];
        const std::strong_ordering ord = ktc::compare(a, b);
        const int diff_sign = (a - b).sign();
        if (diff_sign < 0) CHECK(ord == std::strong_ordering::less);
        if (diff_sign == 0) CHECK(ord == std::strong_ordering::equal);
        if (diff_sign > 0) CHECK(ord == std::strong_ordering::greater);
    }
}
