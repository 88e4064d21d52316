#include "divlab/approximants.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "divlab/parallel.hpp"
#include "log_cos.hpp"

namespace divlab {

namespace {

const double kLogMinNormal = std::log(std::numeric_limits<double>::min());
const double kNegInf = -std::numeric_limits<double>::infinity();

// largest double that still represents every integer exactly
constexpr double kMaxExactInt = 9007199254740992.0;  // 2^53

// log cos^2(pi r / t) for integers 0 <= r < 2t.  Lattice points come out
// exact: 0 (cos^2 = 1) at r in {0, t}, -inf (cos^2 = 0) at 2r = t.
double log_cos_sq_reduced(std::uint64_t r, std::uint64_t t) {
    if (r > t)
        r = 2 * t - r;  // cos(2 pi - y) = cos(y)
    if (r == 0 || r == t)
        return 0.0;
    if (2 * r == t)
        return kNegInf;
    if (2 * r > t)
        r = t - r;  // |cos(pi - y)| = |cos(y)|
    return detail::log_cos_sq_pi(static_cast<double>(r) / static_cast<double>(t));
}

// log cos^2(pi x / t); the argument is reduced mod 2t whenever x and t are
// integer-valued.  fmod of two integer-valued doubles is exact, so this
// covers x past 2^53 as well (every such double is an integer).
double log_cos_sq_ratio(double x, double t) {
    if (x == std::floor(x) && t == std::floor(t) && t <= kMaxExactInt / 2) {
        const double r = std::fmod(x, 2.0 * t);
        return log_cos_sq_reduced(static_cast<std::uint64_t>(r),
                                  static_cast<std::uint64_t>(t));
    }
    const double v = x / t;
    const double u = std::abs(v - std::nearbyint(v));  // in [0, 1/2]
    if (u == 0.0)
        return 0.0;
    return detail::log_cos_sq_pi(u);
}

// t^alpha exp(n log_c2); exact 0 once the cosine power leaves the normal
// range, exact t^alpha when the cosine is at a lattice point
double term_from_log_cos_sq(double alpha, std::uint64_t n, double t, double log_c2) {
    if (log_c2 == 0.0)
        return std::pow(t, alpha);
    const double log_cos_power = static_cast<double>(n) * log_c2;
    if (log_cos_power < kLogMinNormal)
        return 0.0;
    const double log_term = alpha * std::log(t) + log_cos_power;
    if (log_term < kLogMinNormal)
        return 0.0;
    return std::exp(log_term);
}

}  // namespace

void ApproximantParams::validate() const {
    if (!(alpha > 0.0))
        throw std::invalid_argument("approximant: alpha must be > 0");
    if (n == 0)
        throw std::invalid_argument("approximant: n must be >= 1");
    if (!(M > 1.0))
        throw std::invalid_argument("approximant: M must be > 1");
    if (!(x >= 0.0 && x <= M))
        throw std::invalid_argument("approximant: x must lie in [0, M]");
}

double f_n_term(double alpha, std::uint64_t n, double x, double t) {
    if (n == 0)
        throw std::invalid_argument("f_n_term: n must be >= 1");
    if (!(t >= 0.0) || !(x >= 0.0))
        throw std::invalid_argument("f_n_term: x and t must be >= 0");
    if (t == 0.0 || x == 0.0)
        return 0.0;
    return term_from_log_cos_sq(alpha, n, t, log_cos_sq_ratio(x, t));
}

double f_n_term(double alpha, std::uint64_t n, const Factorization& x, std::uint64_t t) {
    if (n == 0)
        throw std::invalid_argument("f_n_term: n must be >= 1");
    if (t == 0)
        return 0.0;
    const std::uint64_t r = x.mod(2 * t);
    return term_from_log_cos_sq(alpha, n, static_cast<double>(t), log_cos_sq_reduced(r, t));
}

double approximant_C(const ApproximantParams& p) {
    p.validate();
    const auto k_max = static_cast<std::uint64_t>(std::floor(p.M));
    std::vector<double> terms(k_max);
    parallel_for(k_max, [&](std::size_t i) {
        terms[i] = f_n_term(p.alpha, p.n, p.x, static_cast<double>(i + 1));
    });
    return pairwise_sum(terms);
}

double approximant_tail_bound(const ApproximantParams& p) {
    p.validate();
    if (p.x != std::floor(p.x) || p.x < 1.0 || p.x > kMaxExactInt)
        throw std::invalid_argument("approximant_tail_bound: x must be a positive integer");
    const auto xi = static_cast<std::uint64_t>(p.x);
    const auto k_max = static_cast<std::uint64_t>(std::floor(p.M));
    double bound = 0.0;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        if (xi % k == 0)
            continue;
        const double lq = log_cos_sq_reduced(xi % (2 * k), k);  // < 0 for non-divisors
        bound += term_from_log_cos_sq(p.alpha, p.n, static_cast<double>(k), lq);
    }
    return bound;
}

ConvergeResult converge_to_sigma(double alpha, std::uint64_t x, double M, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("converge_to_sigma: tol must be > 0");
    if (x == 0)
        throw std::invalid_argument("converge_to_sigma: x must be >= 1");
    if (!(M >= static_cast<double>(x)))
        throw std::invalid_argument("converge_to_sigma: M must be >= x");
    constexpr std::uint64_t kIterationCap = std::uint64_t{1} << 60;
    for (std::uint64_t n = 1;; n *= 2) {
        ApproximantParams p{alpha, n, M, static_cast<double>(x)};
        const double bound = approximant_tail_bound(p);
        if (bound <= tol)
            return ConvergeResult{approximant_C(p), n, bound};
        if (n >= kIterationCap)
            throw std::runtime_error("converge_to_sigma: iteration cap exceeded");
    }
}

}  // namespace divlab
