#ifndef KTC_RATIONAL_HPP
#define KTC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ktc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in canonical reduced form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1, enforced at construction.
/// Canonical form makes structural equality numeric equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt numerator, BigInt denominator);

    /// Accepts "p" or "p/q": optional leading minus, decimal digits,
    /// no whitespace. Throws std::invalid_argument on malformed text
    /// and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void canonicalize();

    BigInt num_;
    BigInt den_;  // > 0
};

/// Total order consistent with real-number order.
inline std::strong_ordering compare(const Rational& a, const Rational& b) {
    return a <=> b;
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ktc

#endif  // KTC_RATIONAL_HPP
