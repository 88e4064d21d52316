#include "divlab/gronwall.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "divlab/parallel.hpp"

namespace divlab {

namespace {

const double kLogMinNormal = std::log(std::numeric_limits<double>::min());

Factorization variant_factorization(GronwallVariant v, std::uint64_t m) {
    switch (v) {
        case GronwallVariant::factorial:
            return factorial_factorization(m);
        case GronwallVariant::lcm:
            return lcm_factorization(m);
        case GronwallVariant::primorial_power:
            return primorial_power_factorization(m);
    }
    throw std::invalid_argument("unknown variant");
}

// widen the requested tolerance to what the work cap can certify
double effective_zeta_tol(double alpha, double requested) {
    if (!(requested > 0.0))
        throw std::invalid_argument("zeta tolerance must be > 0");
    return std::max(requested, zeta_achievable_tol(alpha, kZetaWorkTerms));
}

void require_alpha_above_one(double alpha) {
    if (!(alpha > 1.0 + 1e-6))
        throw std::invalid_argument("comparisons against zeta require alpha > 1 + 1e-6");
}

void require_m_range(std::uint64_t m) {
    if (m < 2 || m > kGronwallMMax)
        throw std::invalid_argument("m must lie in [2, " + std::to_string(kGronwallMMax) + "]");
}

}  // namespace

std::string_view variant_name(GronwallVariant v) {
    switch (v) {
        case GronwallVariant::factorial:
            return "factorial";
        case GronwallVariant::lcm:
            return "lcm";
        case GronwallVariant::primorial_power:
            return "primorial_power";
    }
    return "unknown";
}

GronwallVariant parse_variant(std::string_view name) {
    if (name == "factorial")
        return GronwallVariant::factorial;
    if (name == "lcm")
        return GronwallVariant::lcm;
    if (name == "primorial_power")
        return GronwallVariant::primorial_power;
    throw std::invalid_argument("unknown variant \"" + std::string(name) +
                                "\" (expected factorial, lcm or primorial_power)");
}

double partial_sum_lower_bound(double alpha, std::uint64_t m) {
    require_alpha_above_one(alpha);
    if (m < 2)
        throw std::invalid_argument("partial_sum_lower_bound: m must be >= 2");
    // 1/(4 m!) in the log domain; exactly 0 once subnormal (m >= 171)
    const double log_c = -(std::log(4.0) + std::lgamma(static_cast<double>(m) + 1.0));
    const double c = log_c < kLogMinNormal ? 0.0 : std::exp(log_c);
    double sum = 0.0;
    for (std::uint64_t k = m; k >= 1; --k)
        sum += std::pow(1.0 / static_cast<double>(k) - c, alpha);
    if (c == 0.0)  // dropped correction: widen the lower bound down one ulp
        sum = std::nextafter(sum, -std::numeric_limits<double>::infinity());
    return sum;
}

double delta_bound(double alpha, std::uint64_t m) {
    require_alpha_above_one(alpha);
    if (m < 2)
        throw std::invalid_argument("delta_bound: m must be >= 2");
    const double le = std::log(alpha / 4.0) - std::lgamma(static_cast<double>(m));
    return le < kLogMinNormal ? 0.0 : std::exp(le);
}

std::vector<ConvergenceRecord> gronwall_sequence(double alpha, std::uint64_t m_max,
                                                 GronwallVariant variant, double zeta_tol) {
    require_alpha_above_one(alpha);
    require_m_range(m_max);
    const ZetaValue bracket = zeta(alpha, effective_zeta_tol(alpha, zeta_tol));
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<ConvergenceRecord> records(m_max - 1);
    parallel_for(records.size(), [&](std::size_t i) {
        const std::uint64_t m = i + 2;
        ConvergenceRecord rec;
        rec.m = m;
        rec.variant = variant;
        rec.g_value = g_from_factorization(alpha, variant_factorization(variant, m));
        rec.zeta_value = bracket.value;
        rec.zeta_tail = bracket.tail_bound;
        rec.gap = bracket.value - rec.g_value;
        if (variant == GronwallVariant::factorial) {
            rec.lower_bound = partial_sum_lower_bound(alpha, m);
            rec.delta_bound = divlab::delta_bound(alpha, m);
        } else {
            rec.lower_bound = nan;
            rec.delta_bound = nan;
        }
        records[i] = rec;
    });
    return records;
}

SandwichResult sandwich_check(double alpha, std::uint64_t m, const ZetaValue& zeta_bracket) {
    require_alpha_above_one(alpha);
    require_m_range(m);
    if (zeta_bracket.alpha != alpha)
        throw std::invalid_argument("sandwich_check: zeta bracket computed for another alpha");

    double partial = 0.0;
    for (std::uint64_t k = m; k >= 1; --k)
        partial += std::pow(static_cast<double>(k), -alpha);
    const double db = delta_bound(alpha, m);
    double low = partial - db;
    if (db == 0.0)
        low = std::nextafter(low, -std::numeric_limits<double>::infinity());

    const double g = g_from_factorization(alpha, factorial_factorization(m));
    SandwichResult result;
    result.slack_low = g - low;
    result.slack_high = zeta_bracket.upper() - g;
    result.holds = result.slack_low >= 0.0 && result.slack_high >= 0.0;
    return result;
}

SandwichResult sandwich_check(double alpha, std::uint64_t m, double zeta_tol) {
    require_alpha_above_one(alpha);
    return sandwich_check(alpha, m, zeta(alpha, effective_zeta_tol(alpha, zeta_tol)));
}

}  // namespace divlab
