#include "divlab/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace divlab {

namespace {

void require_positive(std::uint64_t m) {
    if (m == 0)
        throw std::invalid_argument("argument must be a positive integer");
}

void require_within_cap(std::uint64_t m, std::uint64_t cap) {
    require_positive(m);
    if (m > cap)
        throw std::out_of_range("argument " + std::to_string(m) +
                                " exceeds the brute-force cap " + std::to_string(cap));
}

double pow_checked(double base, double exponent) {
    const double v = std::pow(base, exponent);
    if (!std::isfinite(v))
        throw std::overflow_error("divisor-sum term overflows the floating-point range");
    return v;
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
    std::uint64_t prev = 1;
    for (const auto& pp : factors_) {
        if (pp.prime <= prev || pp.exponent == 0)
            throw std::invalid_argument("factorization: primes must strictly increase, exponents >= 1");
        prev = pp.prime;
    }
}

std::uint64_t Factorization::divisor_count() const {
    unsigned __int128 count = 1;
    for (const auto& pp : factors_) {
        count *= static_cast<unsigned __int128>(pp.exponent + 1);
        if (count > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("divisor count exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(count);
}

std::optional<std::uint64_t> Factorization::value_if_at_most(std::uint64_t limit) const {
    unsigned __int128 value = 1;
    for (const auto& pp : factors_)
        for (std::uint64_t j = 0; j < pp.exponent; ++j) {
            value *= pp.prime;
            if (value > limit)
                return std::nullopt;
        }
    return static_cast<std::uint64_t>(value);
}

std::uint64_t Factorization::mod(std::uint64_t modulus) const {
    if (modulus == 0)
        throw std::invalid_argument("mod: zero modulus");
    const auto mulmod = [modulus](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % modulus);
    };
    std::uint64_t acc = 1 % modulus;
    for (const auto& pp : factors_) {
        std::uint64_t base = pp.prime % modulus;
        std::uint64_t e = pp.exponent;
        while (e > 0) {
            if (e & 1)
                acc = mulmod(acc, base);
            base = mulmod(base, base);
            e >>= 1;
        }
    }
    return acc;
}

std::vector<std::uint64_t> divisors_brute(std::uint64_t m, std::uint64_t cap) {
    require_within_cap(m, cap);
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d <= m / d; ++d) {
        if (m % d == 0) {
            low.push_back(d);
            if (d != m / d)
                high.push_back(m / d);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

double sigma_exact(double alpha, std::uint64_t m, std::uint64_t cap) {
    const auto divisors = divisors_brute(m, cap);
    // |k^alpha| grows with k for alpha >= 0 and shrinks otherwise; add the
    // small end first
    double sum = 0.0;
    if (alpha >= 0.0) {
        for (auto k : divisors)
            sum += pow_checked(static_cast<double>(k), alpha);
    } else {
        for (auto it = divisors.rbegin(); it != divisors.rend(); ++it)
            sum += pow_checked(static_cast<double>(*it), alpha);
    }
    return sum;
}

double g_alpha_brute(double alpha, std::uint64_t m, std::uint64_t cap) {
    const auto divisors = divisors_brute(m, cap);
    double sum = 0.0;
    if (alpha >= 0.0) {
        for (auto it = divisors.rbegin(); it != divisors.rend(); ++it)
            sum += pow_checked(static_cast<double>(*it), -alpha);
    } else {
        for (auto k : divisors)
            sum += pow_checked(static_cast<double>(k), -alpha);
    }
    return sum;
}

Factorization factorize(std::uint64_t m, std::uint64_t cap) {
    require_within_cap(m, cap);
    std::vector<PrimePower> factors;
    for (std::uint64_t p = 2; p <= m / p; ++p) {
        if (m % p == 0) {
            std::uint64_t e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            factors.push_back({p, e});
        }
    }
    if (m > 1)
        factors.push_back({m, 1});
    return Factorization(std::move(factors));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    if (limit < 2)
        return {};
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

std::vector<std::uint64_t> first_primes(std::uint64_t count) {
    if (count == 0)
        return {};
    // p_k < k (ln k + ln ln k) for k >= 6
    std::uint64_t limit = 16;
    if (count >= 6) {
        const double k = static_cast<double>(count);
        limit = static_cast<std::uint64_t>(k * (std::log(k) + std::log(std::log(k)))) + 2;
    }
    auto primes = primes_up_to(limit);
    while (primes.size() < count) {
        limit *= 2;
        primes = primes_up_to(limit);
    }
    primes.resize(count);
    return primes;
}

Factorization factorial_factorization(std::uint64_t m) {
    require_positive(m);
    std::vector<PrimePower> factors;
    for (auto p : primes_up_to(m)) {
        std::uint64_t e = 0;
        for (std::uint64_t q = m / p; q > 0; q /= p)
            e += q;
        factors.push_back({p, e});
    }
    return Factorization(std::move(factors));
}

Factorization lcm_factorization(std::uint64_t m) {
    require_positive(m);
    std::vector<PrimePower> factors;
    for (auto p : primes_up_to(m)) {
        std::uint64_t e = 1;
        std::uint64_t q = p;
        while (q <= m / p) {
            q *= p;
            ++e;
        }
        factors.push_back({p, e});
    }
    return Factorization(std::move(factors));
}

Factorization primorial_power_factorization(std::uint64_t m) {
    require_positive(m);
    std::vector<PrimePower> factors;
    for (auto p : first_primes(m))
        factors.push_back({p, m});
    return Factorization(std::move(factors));
}

double g_from_factorization(double alpha, const Factorization& f) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("g_from_factorization requires alpha > 0");
    static const double kLogMinNormal = std::log(std::numeric_limits<double>::min());
    double product = 1.0;
    for (const auto& pp : f.factors()) {
        const double log_p = std::log(static_cast<double>(pp.prime));
        // p^(-j alpha) underflows for j past this point; those terms are 0
        const auto j_hi = std::min<std::uint64_t>(
            pp.exponent,
            static_cast<std::uint64_t>(-kLogMinNormal / (alpha * log_p)) + 1);
        double inner = 0.0;
        for (std::uint64_t j = j_hi; j >= 1; --j)
            inner += std::exp(-static_cast<double>(j) * alpha * log_p);
        inner += 1.0;  // j = 0 term, the largest
        product *= inner;
    }
    return product;
}

ZetaValue zeta(double alpha, double tol) {
    if (!(alpha > 1.0 + 1e-6))
        throw std::invalid_argument("zeta requires alpha > 1 + 1e-6");
    if (!(tol > 0.0))
        throw std::invalid_argument("zeta requires tol > 0");

    const auto tail = [alpha](double k) { return std::pow(k, 1.0 - alpha) / (alpha - 1.0); };

    // minimal K with K^(1-alpha)/(alpha-1) <= tol
    double k_real = std::pow(tol * (alpha - 1.0), -1.0 / (alpha - 1.0));
    if (!(k_real <= static_cast<double>(kZetaTermCap)))
        throw std::runtime_error("zeta: tolerance unachievable within " +
                                 std::to_string(kZetaTermCap) + " terms");
    std::uint64_t terms = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(k_real)));
    while (tail(static_cast<double>(terms)) > tol) {
        if (terms >= kZetaTermCap)
            throw std::runtime_error("zeta: tolerance unachievable within term cap");
        ++terms;
    }
    while (terms > 1 && tail(static_cast<double>(terms - 1)) <= tol)
        --terms;

    double sum = 0.0;
    for (std::uint64_t k = terms; k >= 1; --k)
        sum += std::pow(static_cast<double>(k), -alpha);
    return ZetaValue{alpha, sum, tail(static_cast<double>(terms)), terms};
}

double zeta_achievable_tol(double alpha, std::uint64_t max_terms) {
    if (!(alpha > 1.0 + 1e-6))
        throw std::invalid_argument("zeta_achievable_tol requires alpha > 1 + 1e-6");
    if (max_terms == 0)
        throw std::invalid_argument("zeta_achievable_tol requires max_terms >= 1");
    const double bound =
        std::pow(static_cast<double>(max_terms), 1.0 - alpha) / (alpha - 1.0);
    return bound * (1.0 + 1e-9);
}

}  // namespace divlab
