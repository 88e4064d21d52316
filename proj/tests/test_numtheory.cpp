#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "divlab/numtheory.hpp"

using namespace divlab;

namespace {

// test-side oracle: O(m) scan, independent of the trial-division pairing
std::vector<std::uint64_t> divisors_naive(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 1; k <= m; ++k)
        if (m % k == 0)
            out.push_back(k);
    return out;
}

// test-side oracle: direct divisor scan of sum k^(-alpha)
double g_naive(double alpha, std::uint64_t m) {
    double sum = 0.0;
    for (std::uint64_t k = m; k >= 1; --k)
        if (m % k == 0)
            sum += std::pow(static_cast<double>(k), -alpha);
    return sum;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

}  // namespace

TEST_CASE("divisor enumeration") {
    CHECK(divisors_brute(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors_brute(6) == std::vector<std::uint64_t>{1, 2, 3, 6});
    CHECK(divisors_brute(7) == std::vector<std::uint64_t>{1, 7});
    CHECK_THROWS_AS(divisors_brute(0), std::invalid_argument);
    CHECK_THROWS_AS(divisors_brute(kDefaultBruteCap + 1), std::out_of_range);
    CHECK_NOTHROW(divisors_brute(kDefaultBruteCap + 1, kDefaultBruteCap + 2));
}

TEST_CASE("divisor list properties against naive oracle") {
    std::mt19937_64 rng(20240815);
    std::uniform_int_distribution<std::uint64_t> dist(1, 5000);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t m = dist(rng);
        const auto divisors = divisors_brute(m);
        CHECK(divisors == divisors_naive(m));
        CHECK(divisors.front() == 1);
        CHECK(divisors.back() == m);
        CHECK(divisors.size() == factorize(m).divisor_count());
    }
}

TEST_CASE("sigma_exact") {
    CHECK(sigma_exact(1, 6) == doctest::Approx(12).epsilon(1e-15));
    CHECK(sigma_exact(2, 1) == 1.0);
    CHECK(sigma_exact(0, 12) == 6.0);  // divisor count
    CHECK_THROWS_AS(sigma_exact(400, 1000), std::overflow_error);
}

TEST_CASE("g_alpha_brute") {
    CHECK(g_alpha_brute(2, 6) == doctest::Approx(50.0 / 36.0).epsilon(1e-15));
    CHECK(g_alpha_brute(2, 1) == 1.0);
    for (std::uint64_t m : {12ull, 360ull, 5040ull})
        CHECK(g_alpha_brute(2, m) == doctest::Approx(g_naive(2, m)).epsilon(1e-15));
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 31ull, 9973ull})
        CHECK(g_alpha_brute(2, p) ==
              doctest::Approx(1.0 + 1.0 / static_cast<double>(p * p)).epsilon(1e-15));
    // negative alpha is allowed here (no zeta comparison involved)
    CHECK(g_alpha_brute(-1, 6) == doctest::Approx(12.0).epsilon(1e-15));
}

TEST_CASE("factorial factorization via Legendre sums") {
    CHECK(factorial_factorization(1).factors().empty());
    CHECK(factorial_factorization(4).factors() ==
          std::vector<PrimePower>{{2, 3}, {3, 1}});
    const auto f10 = factorial_factorization(10);
    CHECK(f10.factors() == std::vector<PrimePower>{{2, 8}, {3, 4}, {5, 2}, {7, 1}});
    CHECK(f10.value_if_at_most(10'000'000) == 3628800);  // 10! multiplied out
}

TEST_CASE("lcm factorization") {
    CHECK(lcm_factorization(1).factors().empty());
    CHECK(lcm_factorization(6).value_if_at_most(1000) == 60);
    CHECK(lcm_factorization(6).factors() ==
          std::vector<PrimePower>{{2, 2}, {3, 1}, {5, 1}});
    CHECK(lcm_factorization(10).value_if_at_most(10000) == 2520);
}

TEST_CASE("primorial power factorization") {
    CHECK(primorial_power_factorization(1).factors() == std::vector<PrimePower>{{2, 1}});
    CHECK(primorial_power_factorization(2).value_if_at_most(100) == 36);
    CHECK(primorial_power_factorization(3).value_if_at_most(100000) == 27000);  // 30^3
}

TEST_CASE("factorization helpers") {
    CHECK(factorize(1).is_one());
    CHECK(factorize(360).factors() == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(Factorization().value_if_at_most(10) == 1);
    CHECK_FALSE(factorial_factorization(30).value_if_at_most(1ull << 62).has_value());
    CHECK_THROWS_AS(Factorization({{3, 1}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Factorization({{2, 0}}), std::invalid_argument);

    // modular value by exponentiation vs a plain product loop on 20!
    const std::uint64_t mod = 1000003;
    std::uint64_t expect = 1;
    for (std::uint64_t k = 2; k <= 20; ++k)
        expect = mulmod(expect, k, mod);
    CHECK(factorial_factorization(20).mod(mod) == expect);
}

TEST_CASE("g_from_factorization matches the brutal route") {
    CHECK(g_from_factorization(2, Factorization({{2, 1}, {3, 1}})) ==
          doctest::Approx(g_alpha_brute(2, 6)).epsilon(1e-15));
    CHECK(g_from_factorization(2, Factorization()) == 1.0);
    CHECK(g_from_factorization(2, factorial_factorization(5)) ==
          doctest::Approx(g_alpha_brute(2, 120)).epsilon(1e-14));
    CHECK_THROWS_AS(g_from_factorization(0, Factorization()), std::invalid_argument);
}

TEST_CASE("brute vs factorized route agree over a random sweep") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(1, 10000);
    const double alphas[] = {0.5, 1.0, 2.0, 3.7};
    for (int i = 0; i < 400; ++i) {
        const std::uint64_t m = dist(rng);
        const auto f = factorize(m);
        for (double alpha : alphas) {
            const double a = g_alpha_brute(alpha, m);
            const double b = g_from_factorization(alpha, f);
            CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
        }
    }
}

TEST_CASE("zeta brackets") {
    const double pi = std::numbers::pi;

    SUBCASE("contains the closed forms") {
        const auto z2 = zeta(2, 1e-6);
        CHECK(z2.value <= pi * pi / 6);
        CHECK(z2.upper() >= pi * pi / 6);
        CHECK(z2.tail_bound <= 1e-6);

        const auto z4 = zeta(4, 1e-10);
        CHECK(z4.value <= pi * pi * pi * pi / 90);
        CHECK(z4.upper() >= pi * pi * pi * pi / 90);

        const auto z10 = zeta(10, 1e-12);
        CHECK(z10.value <= 1.000994575127818085);
        CHECK(z10.upper() >= 1.000994575127818085);
        CHECK(z10.terms_used <= 25);
    }

    SUBCASE("K is minimal") {
        // feasible tolerances: small alpha needs many terms under the cap
        const std::pair<double, double> cases[] = {{1.5, 1e-3}, {2.0, 1e-5}, {4.0, 1e-8}};
        for (const auto& [alpha, tol] : cases) {
            const auto z = zeta(alpha, tol);
            const auto tail = [alpha](double k) {
                return std::pow(k, 1.0 - alpha) / (alpha - 1.0);
            };
            CHECK(tail(static_cast<double>(z.terms_used)) <= tol);
            if (z.terms_used > 1)
                CHECK(tail(static_cast<double>(z.terms_used - 1)) > tol);
        }
    }

    SUBCASE("bracket overlaps an independent direct sum") {
        for (double alpha : {1.5, 2.0, 3.0}) {
            double direct = 0.0;  // test-side 10^6-term sum, high end first
            for (std::uint64_t k = 1'000'000; k >= 1; --k)
                direct += std::pow(static_cast<double>(k), -alpha);
            const double direct_tail =
                std::pow(1e6, 1.0 - alpha) / (alpha - 1.0);
            const auto z = zeta(alpha, zeta_achievable_tol(alpha, 2'000'000));
            CHECK(z.value <= direct + direct_tail);
            CHECK(direct <= z.upper());  // brackets overlap
        }
    }

    SUBCASE("domain and cap errors") {
        CHECK_THROWS_AS(zeta(1.0, 1e-6), std::invalid_argument);
        CHECK_THROWS_AS(zeta(2, -1.0), std::invalid_argument);
        // alpha=2 at 1e-10 needs 10^10 terms, past the 10^9 term cap
        CHECK_THROWS_AS(zeta(2, 1e-10), std::runtime_error);
    }
}

TEST_CASE("G stays below the zeta bracket") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint64_t> dist(1, 10000);
    for (double alpha : {1.5, 2.0, 3.0}) {
        const auto z = zeta(alpha, std::max(1e-6, zeta_achievable_tol(alpha, 1'000'000)));
        for (int i = 0; i < 300; ++i)
            CHECK(g_alpha_brute(alpha, dist(rng)) <= z.upper() + 1e-12);
    }
}

TEST_CASE("g_from_factorization handles huge exponents without degenerating") {
    // exponents far past the underflow point contribute exactly the full
    // geometric limit; the closed form is 1/(1 - p^(-alpha)) per prime
    const Factorization f({{2, 100000}, {3, 100000}});
    const double closed = 1.0 / (1.0 - std::pow(2.0, -2.0)) / (1.0 - std::pow(3.0, -2.0));
    CHECK(g_from_factorization(2, f) == doctest::Approx(closed).epsilon(1e-14));
}

TEST_CASE("prime helpers") {
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(13) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13});
    CHECK(first_primes(5) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
    CHECK(first_primes(100).back() == 541);
}
