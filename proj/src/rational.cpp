#include "ktc/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace ktc {

namespace {

BigInt parse_digits(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw std::invalid_argument("malformed rational \"" + std::string(whole) +
                                    "\": missing digits");
    }
    BigInt value = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("malformed rational \"" + std::string(whole) +
                                        "\": unexpected character '" + std::string(1, ch) + "'");
        }
        value = value * 10 + (ch - '0');
    }
    return value;
}

}  // namespace

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) {
        throw std::domain_error("rational with zero denominator");
    }
    canonicalize();
}

void Rational::canonicalize() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }
    BigInt num;
    BigInt den = 1;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num = parse_digits(rest.substr(0, slash), text);
        den = parse_digits(rest.substr(slash + 1), text);
        if (den.is_zero()) {
            throw std::domain_error("malformed rational \"" + std::string(text) +
                                    "\": zero denominator");
        }
    } else {
        num = parse_digits(rest, text);
    }
    if (negative) {
        num = -num;
    }
    return Rational(std::move(num), std::move(den));
}

std::string Rational::to_string() const {
    std::string out = num_.str();
    if (den_ != 1) {
        out += '/';
        out += den_.str();
    }
    return out;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // a/ad vs b/bd with both denominators positive
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (rhs < lhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace ktc
