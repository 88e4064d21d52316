#include "divlab/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace divlab {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0)
        throw std::invalid_argument("rational: zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = (g != 0) ? numerator / g : 0;
    den_ = (g != 0) ? denominator / g : 1;
}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("rational: expected \"p\" or \"p/q\", got \"" +
                                     std::string(text) + "\"");
    };
    const auto slash = text.find('/');
    const auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size())
            throw bad();
        return v;
    };
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::int64_t Rational::floor() const {
    if (num_ >= 0)
        return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
}

std::int64_t Rational::ceil() const {
    if (num_ >= 0)
        return (num_ + den_ - 1) / den_;
    return -((-num_) / den_);
}

std::string Rational::str() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    // cross-multiply in 128 bits; endpoints are small but do not rely on it
    const __int128 lhs = static_cast<__int128>(num_) * other.den_;
    const __int128 rhs = static_cast<__int128>(other.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace divlab
