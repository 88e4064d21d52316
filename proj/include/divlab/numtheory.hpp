#pragma once
// Exact integer-side arithmetic: divisor enumeration, prime factorizations of
// m!, lcm(1..m) and primorial powers, normalized divisor sums by two
// independent routes, and certified brackets for zeta partial sums.
//
// Huge arguments (m!, lcm, P_m) are never materialized as plain integers; all
// evaluation on them goes through the prime-exponent representation.

#include <cstdint>
#include <optional>
#include <vector>

namespace divlab {

struct PrimePower {
    std::uint64_t prime;
    std::uint64_t exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Ordered prime-power representation of a positive integer; the empty list
// represents 1.  Primes strictly increase and every exponent is >= 1.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> factors);

    const std::vector<PrimePower>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    // prod (e_i + 1); throws std::overflow_error if it does not fit.
    std::uint64_t divisor_count() const;

    // The represented integer, if it is <= limit.
    std::optional<std::uint64_t> value_if_at_most(std::uint64_t limit) const;

    // The represented integer mod `modulus`, by modular exponentiation.
    std::uint64_t mod(std::uint64_t modulus) const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> factors_;
};

inline constexpr std::uint64_t kDefaultBruteCap = 10'000'000;

// All divisors of m, ascending.  Trial division; m must stay within `cap`.
std::vector<std::uint64_t> divisors_brute(std::uint64_t m,
                                          std::uint64_t cap = kDefaultBruteCap);

// sigma_alpha(m) = sum over divisors k of k^alpha.  Terms are accumulated
// smallest magnitude first.  Throws std::overflow_error if a term leaves the
// double range.
double sigma_exact(double alpha, std::uint64_t m, std::uint64_t cap = kDefaultBruteCap);

// G_alpha(m) = sigma_alpha(m) / m^alpha = sum over divisors k of k^(-alpha),
// evaluated in the second form so m^alpha is never formed.
double g_alpha_brute(double alpha, std::uint64_t m, std::uint64_t cap = kDefaultBruteCap);

// Trial-division factorization of an ordinary integer within the brute cap.
Factorization factorize(std::uint64_t m, std::uint64_t cap = kDefaultBruteCap);

// Exact factorization of m!; exponent of p is Legendre's sum of floor(m/p^j).
Factorization factorial_factorization(std::uint64_t m);

// Exact factorization of lcm(1..m); exponent of p is the largest j with p^j <= m.
Factorization lcm_factorization(std::uint64_t m);

// (p_1 ... p_m)^m over the first m primes.
Factorization primorial_power_factorization(std::uint64_t m);

// G_alpha of the represented integer as the product over prime powers of the
// geometric sums sum_{j=0..e} p^(-j alpha), each summed smallest term first.
// Requires alpha > 0.
double g_from_factorization(double alpha, const Factorization& f);

struct ZetaValue {
    double alpha;
    double value;             // partial sum: certified lower bound
    double tail_bound;        // value <= zeta(alpha) <= value + tail_bound
    std::uint64_t terms_used;

    double upper() const { return value + tail_bound; }
};

inline constexpr std::uint64_t kZetaTermCap = 1'000'000'000;

// Partial sum of K terms with the integral-comparison tail bound
// K^(1-alpha)/(alpha-1) <= tol, K minimal.  Requires alpha > 1 + 1e-6.
// Throws std::runtime_error if K would exceed kZetaTermCap.
ZetaValue zeta(double alpha, double tol);

// Tightest tail bound certifiable with at most `max_terms` terms (with a
// small headroom factor so zeta() accepts it).
double zeta_achievable_tol(double alpha, std::uint64_t max_terms);

// All primes <= limit (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// The first `count` primes.
std::vector<std::uint64_t> first_primes(std::uint64_t count);

}  // namespace divlab
