#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "divlab/gronwall.hpp"
#include "divlab/numtheory.hpp"

using namespace divlab;

TEST_CASE("variant names round-trip") {
    for (auto v : {GronwallVariant::factorial, GronwallVariant::lcm,
                   GronwallVariant::primorial_power})
        CHECK(parse_variant(variant_name(v)) == v);
    CHECK_THROWS_AS(parse_variant("fact"), std::invalid_argument);
}

TEST_CASE("partial sum lower bound") {
    // 4*2! = 8: (1 - 1/8)^2 + (1/2 - 1/8)^2
    CHECK(partial_sum_lower_bound(2, 2) == doctest::Approx(0.90625).epsilon(1e-14));
    CHECK(partial_sum_lower_bound(3, 2) == doctest::Approx(0.72265625).epsilon(1e-14));
    // the 1/(4 m!) correction underflows from m = 171 on; bound becomes the
    // bare partial sum, widened one ulp down
    double partial = 0.0;
    for (std::uint64_t k = 180; k >= 1; --k)
        partial += std::pow(static_cast<double>(k), -2.0);
    CHECK(partial_sum_lower_bound(2, 180) <= partial);
    CHECK(partial_sum_lower_bound(2, 180) == doctest::Approx(partial).epsilon(1e-15));
    CHECK_THROWS_AS(partial_sum_lower_bound(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(partial_sum_lower_bound(1.0, 5), std::invalid_argument);
}

TEST_CASE("delta bound") {
    CHECK(delta_bound(2, 5) == doctest::Approx(0.5 / 24.0).epsilon(1e-14));
    CHECK(delta_bound(2, 2) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(delta_bound(4, 21) < 1e-18);
    CHECK(delta_bound(2, 200) == 0.0);  // factorial decay underflows
    CHECK_THROWS_AS(delta_bound(2, 1), std::invalid_argument);
}

TEST_CASE("gronwall sequences") {
    SUBCASE("factorial records and bounds") {
        const auto records = gronwall_sequence(2, 12, GronwallVariant::factorial);
        CHECK(records.size() == 11);
        CHECK(records[0].m == 2);
        CHECK(records[0].g_value == doctest::Approx(1.25).epsilon(1e-15));
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& rec = records[i];
            CHECK(rec.gap > 0.0);
            if (i > 0)
                CHECK(rec.gap < records[i - 1].gap);
            CHECK(rec.lower_bound <= rec.g_value + 1e-12);
            CHECK(rec.gap >= -(rec.zeta_tail + 1e-12));
            // sandwich-implied ceiling on the gap
            double partial = 0.0;
            for (std::uint64_t k = rec.m; k >= 1; --k)
                partial += std::pow(static_cast<double>(k), -2.0);
            CHECK(rec.gap <= rec.zeta_value + rec.zeta_tail - partial +
                                 delta_bound(2, rec.m) + 1e-12);
        }
    }

    SUBCASE("primorial-power record against the brute route") {
        const auto records = gronwall_sequence(2, 3, GronwallVariant::primorial_power);
        // P_3 = 30^3 = 27000 is small enough to enumerate divisors directly
        CHECK(records[1].m == 3);
        CHECK(records[1].g_value ==
              doctest::Approx(g_alpha_brute(2, 27000)).epsilon(1e-13));
        CHECK(std::isnan(records[1].lower_bound));
        CHECK(std::isnan(records[1].delta_bound));
    }

    SUBCASE("lcm variant leaves factorial-only bounds empty") {
        const auto records = gronwall_sequence(2, 6, GronwallVariant::lcm);
        for (const auto& rec : records) {
            CHECK(std::isnan(rec.lower_bound));
            CHECK(std::isnan(rec.delta_bound));
        }
    }

    SUBCASE("argument validation") {
        CHECK_THROWS_AS(gronwall_sequence(1.0, 12, GronwallVariant::factorial),
                        std::invalid_argument);
        CHECK_THROWS_AS(gronwall_sequence(2, 1, GronwallVariant::factorial),
                        std::invalid_argument);
        CHECK_THROWS_AS(gronwall_sequence(2, 501, GronwallVariant::factorial),
                        std::invalid_argument);
    }
}

namespace {

Factorization variant_factorization(GronwallVariant v, std::uint64_t m) {
    switch (v) {
        case GronwallVariant::factorial: return factorial_factorization(m);
        case GronwallVariant::lcm: return lcm_factorization(m);
        case GronwallVariant::primorial_power: return primorial_power_factorization(m);
    }
    return {};
}

// Smallest divisor of the step-m integer that the step-(m-1) integer lacks.
// The gap decrement at step m is at least (min new divisor)^(-alpha); when
// that falls under the double rounding floor the two gaps may legitimately
// round to the same value (e.g. 36! over 35! only adds divisors >= 3^16).
double min_new_divisor(const Factorization& prev, const Factorization& cur) {
    double smallest = std::numeric_limits<double>::infinity();
    for (const auto& pp : cur.factors()) {
        std::uint64_t prev_exp = 0;
        for (const auto& q : prev.factors())
            if (q.prime == pp.prime)
                prev_exp = q.exponent;
        if (pp.exponent > prev_exp)
            smallest = std::min(smallest, std::pow(static_cast<double>(pp.prime),
                                                   static_cast<double>(prev_exp + 1)));
    }
    return smallest;
}

}  // namespace

TEST_CASE("gap positive and decreasing for every variant at desk scale") {
    for (double alpha : {1.5, 2.0, 3.0}) {
        for (auto variant : {GronwallVariant::factorial, GronwallVariant::lcm,
                             GronwallVariant::primorial_power}) {
            const auto records = gronwall_sequence(alpha, 40, variant);
            for (std::size_t i = 0; i < records.size(); ++i) {
                REQUIRE(records[i].gap > 0.0);
                if (i == 0)
                    continue;
                const double decrement =
                    std::pow(min_new_divisor(variant_factorization(variant, records[i].m - 1),
                                             variant_factorization(variant, records[i].m)),
                             -alpha);
                const double floor_ulps =
                    32.0 * std::numeric_limits<double>::epsilon() * records[i - 1].g_value;
                if (decrement > floor_ulps)
                    REQUIRE(records[i].gap < records[i - 1].gap);
                else
                    REQUIRE(records[i].gap <= records[i - 1].gap);
            }
            REQUIRE(records.back().gap < records.front().gap);
        }
    }
}

TEST_CASE("variant consistency with the brute route while values stay small") {
    for (auto variant : {GronwallVariant::factorial, GronwallVariant::lcm,
                         GronwallVariant::primorial_power}) {
        const auto records = gronwall_sequence(2, 25, variant);
        int checked = 0;
        for (const auto& rec : records) {
            Factorization f;
            switch (variant) {
                case GronwallVariant::factorial: f = factorial_factorization(rec.m); break;
                case GronwallVariant::lcm: f = lcm_factorization(rec.m); break;
                case GronwallVariant::primorial_power:
                    f = primorial_power_factorization(rec.m);
                    break;
            }
            const auto value = f.value_if_at_most(kDefaultBruteCap);
            if (!value)
                continue;
            ++checked;
            const double brute = g_alpha_brute(2, *value);
            REQUIRE(std::abs(rec.g_value - brute) <= 1e-12 * brute);
        }
        // primorial powers outgrow the brute cap from m = 4 (210^4) on
        REQUIRE(checked >= 2);
    }
}

TEST_CASE("sandwich check") {
    SUBCASE("spot cases") {
        CHECK(sandwich_check(2, 6).holds);
        const auto r = sandwich_check(2, 2);
        CHECK(r.holds);
        // G_2(2) = 1.25, partial sum 1.25, delta bound 0.5
        CHECK(r.slack_low == doctest::Approx(0.5).epsilon(1e-12));
        // near-divergence stress: bracket is huge but the inequalities hold
        const auto stress = sandwich_check(1.0001, 3);
        CHECK(stress.holds);
    }

    SUBCASE("holds across alphas and m with a shared bracket") {
        for (double alpha : {1.5, 2.0, 3.0, 5.0}) {
            const auto bracket =
                zeta(alpha, std::max(1e-8, zeta_achievable_tol(alpha, 1'000'000)));
            for (std::uint64_t m = 2; m <= 40; ++m) {
                const auto r = sandwich_check(alpha, m, bracket);
                REQUIRE(r.holds);
                REQUIRE(r.slack_low >= 0.0);
                REQUIRE(r.slack_high >= 0.0);
            }
        }
    }

    SUBCASE("alpha mismatch between bracket and query") {
        const auto bracket = zeta(2, 1e-6);
        CHECK_THROWS_AS(sandwich_check(3, 5, bracket), std::invalid_argument);
    }
}
