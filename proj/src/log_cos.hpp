#pragma once
// log(cos^2(pi u)) for u in [0, 1/2], via 2 log1p(-2 sin^2(pi u / 2)).
//
// The direct route log(cos(pi u)^2) loses absolute accuracy ~eps in the log,
// which a cos^{2n} power amplifies by 2n.  The log1p form keeps the error
// relative to the log itself, so exp(n * log_cos_sq_pi(u)) stays accurate to
// a few eps even at n ~ 10^6.

#include <cmath>
#include <limits>
#include <numbers>

namespace divlab::detail {

inline double log_cos_sq_pi(double u) {
    if (u >= 0.5)  // cos(pi/2) is exactly 0
        return -std::numeric_limits<double>::infinity();
    const double s = std::sin(0.5 * std::numbers::pi * u);
    const double arg = -2.0 * s * s;
    if (arg <= -1.0)
        return -std::numeric_limits<double>::infinity();
    return 2.0 * std::log1p(arg);
}

}  // namespace divlab::detail
