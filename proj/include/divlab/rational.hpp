#pragma once
// Exact rational endpoints.  Whether an endpoint is an integer selects between
// two discontinuous summation regimes, so integrality is decided on the exact
// numerator/denominator pair, never by floating-point comparison.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace divlab {

class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: integers embed
    Rational(std::int64_t numerator, std::int64_t denominator);

    // Accepts "p", "-p", "p/q".  Decimal notation is rejected.
    static Rational parse(std::string_view text);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t floor() const;
    std::int64_t ceil() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    Rational operator-() const;
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator+(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    std::strong_ordering operator<=>(const Rational& other) const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace divlab
