#pragma once
// Convergence of G_alpha = sigma_alpha(m)/m^alpha to zeta(alpha) along the
// factorial, lcm(1..m) and primorial-power subsequences, with the explicit
// sandwich
//
//   sum_{k<=m} k^(-alpha) - (alpha/4)/(m-1)!  <=  G_alpha(m!)  <=  zeta(alpha).

#include <cstdint>
#include <string_view>
#include <vector>

#include "divlab/numtheory.hpp"

namespace divlab {

enum class GronwallVariant { factorial, lcm, primorial_power };

std::string_view variant_name(GronwallVariant v);
GronwallVariant parse_variant(std::string_view name);  // throws std::invalid_argument

struct ConvergenceRecord {
    std::uint64_t m;
    GronwallVariant variant;
    double g_value;
    double zeta_value;   // certified lower end of the zeta bracket
    double zeta_tail;    // bracket width: zeta in [zeta_value, zeta_value + zeta_tail]
    double gap;          // zeta_value - g_value
    double lower_bound;  // sum (1/k - 1/(4 m!))^alpha; factorial variant only, else NaN
    double delta_bound;  // (alpha/4)/(m-1)!;            factorial variant only, else NaN
};

inline constexpr std::uint64_t kGronwallMMax = 500;

// Work cap for the zeta bracket inside experiment sweeps; the requested
// tolerance is widened to whatever this many terms can certify.
inline constexpr std::uint64_t kZetaWorkTerms = 10'000'000;

// One record per m in [2, m_max].  Requires alpha > 1 + 1e-6 and
// m_max <= kGronwallMMax.
std::vector<ConvergenceRecord> gronwall_sequence(double alpha, std::uint64_t m_max,
                                                 GronwallVariant variant,
                                                 double zeta_tol = 1e-8);

// sum_{k=1..m} (1/k - 1/(4 m!))^alpha; 1/(4 m!) is formed in the log domain
// and is exactly 0 once it underflows (m >= 171), which only weakens the
// lower bound.
double partial_sum_lower_bound(double alpha, std::uint64_t m);

// (alpha/4)/(m-1)! in the log domain; 0 on underflow.
double delta_bound(double alpha, std::uint64_t m);

struct SandwichResult {
    bool holds;
    double slack_low;   // G_alpha(m!) - (partial sum - delta_bound)
    double slack_high;  // zeta upper bracket - G_alpha(m!)
};

// Both sides of the sandwich at (alpha, m), using the conservative side of a
// precomputed zeta bracket.
SandwichResult sandwich_check(double alpha, std::uint64_t m, const ZetaValue& zeta_bracket);
SandwichResult sandwich_check(double alpha, std::uint64_t m, double zeta_tol = 1e-8);

}  // namespace divlab
