#include "divlab/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "divlab/parallel.hpp"
#include "log_cos.hpp"

namespace divlab {

namespace {

const double kLogMinNormal = std::log(std::numeric_limits<double>::min());

void require_n(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("kernel: n must be >= 1");
}

}  // namespace

double phi_n(std::uint64_t n, double x) {
    require_n(n);
    // reduce to the distance from the nearest integer; cos^2(pi x) depends
    // only on it, and the reduction is exact in floating point
    const double r = std::abs(x - std::nearbyint(x));  // in [0, 1/2]
    const double amplitude = std::sqrt(static_cast<double>(n) * std::numbers::pi);
    if (r == 0.0)
        return amplitude;
    const double log_power = static_cast<double>(n) * detail::log_cos_sq_pi(r);
    if (log_power < kLogMinNormal)
        return 0.0;
    return amplitude * std::exp(log_power);
}

double phi_envelope(std::uint64_t n, double d) {
    require_n(n);
    if (!(d > 0.0))
        throw std::invalid_argument("phi_envelope: d must be > 0");
    if (d >= 0.5)
        return 0.0;
    const double le = 0.5 * std::log(static_cast<double>(n) * std::numbers::pi) +
                      static_cast<double>(n) * std::log1p(-4.0 * d * d);
    return le < kLogMinNormal ? 0.0 : std::exp(le);
}

double normalization_exact(std::uint64_t n) {
    require_n(n);
    // run the recurrence in extended precision: a million steps still leave
    // the double rounding untouched
    long double value = std::sqrt(std::numbers::pi_v<long double>) / 2.0L;
    for (std::uint64_t k = 2; k <= n; ++k)
        value *= (2.0L * k - 1.0L) / (2.0L * k) *
                 std::sqrt(static_cast<long double>(k) / static_cast<long double>(k - 1));
    return static_cast<double>(value);
}

std::vector<double> normalization_sweep(std::uint64_t n_max) {
    require_n(n_max);
    std::vector<double> out(n_max);
    long double value = std::sqrt(std::numbers::pi_v<long double>) / 2.0L;
    out[0] = static_cast<double>(value);
    for (std::uint64_t k = 2; k <= n_max; ++k) {
        value *= (2.0L * k - 1.0L) / (2.0L * k) *
                 std::sqrt(static_cast<long double>(k) / static_cast<long double>(k - 1));
        out[k - 1] = static_cast<double>(value);
    }
    return out;
}

KernelInterval KernelInterval::make(const Rational& eta1, const Rational& eta2) {
    if (eta2 < eta1)
        throw std::invalid_argument("interval: eta1 must be <= eta2");
    KernelInterval iv;
    iv.eta1 = eta1;
    iv.eta2 = eta2;
    iv.endpoint1_integer = eta1.is_integer();
    iv.endpoint2_integer = eta2.is_integer();
    if (iv.endpoint1_integer != iv.endpoint2_integer)
        throw std::invalid_argument(
            "interval: endpoints must be both integers or both non-integers (got " +
            eta1.str() + ", " + eta2.str() + ")");
    return iv;
}

std::vector<ConditionARecord> check_condition_a(const std::vector<std::uint64_t>& n_list,
                                                double delta) {
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("check_condition_a: delta must lie in (0, 1/2)");
    std::vector<ConditionARecord> records;
    records.reserve(n_list.size());
    for (auto n : n_list) {
        const double envelope = phi_envelope(n, delta);
        double tail;
        if (envelope * (1.0 - 2.0 * delta) < 1e-306) {
            tail = 0.0;  // below the normal range: certified negligible
        } else {
            const double tol = std::max(1e-13, envelope * 1e-6);
            const auto q = integrate_adaptive([n](double x) { return phi_n(n, x); }, delta,
                                              0.5, tol);
            tail = 2.0 * q.value;
        }
        if (tail > envelope * (1.0 + 1e-8))
            throw std::runtime_error("condition (a): tail mass exceeds analytic envelope");
        records.push_back({n, envelope, tail});
    }
    return records;
}

QuadratureResult integrate_against(std::uint64_t n, const TestFunction& f,
                                   const KernelInterval& iv, double tol) {
    require_n(n);
    if (!(tol > 0.0))
        throw std::invalid_argument("integrate_against: tol must be > 0");
    if (!f.evaluator)
        throw std::invalid_argument("integrate_against: test function has no evaluator");

    QuadratureResult total;
    if (iv.eta1 == iv.eta2)
        return total;

    const double a = iv.eta1.to_double();
    const double b = iv.eta2.to_double();
    const double w = std::min(0.5, 6.0 / std::sqrt(static_cast<double>(n)));

    // peak windows around every integer whose w-neighborhood meets [a, b]
    using Span = std::pair<double, double>;
    std::vector<Span> windows;
    const auto k_lo = static_cast<std::int64_t>(std::ceil(a - w));
    const auto k_hi = static_cast<std::int64_t>(std::floor(b + w));
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        const double lo = std::max(a, static_cast<double>(k) - w);
        const double hi = std::min(b, static_cast<double>(k) + w);
        if (lo >= hi)
            continue;
        if (!windows.empty() && lo <= windows.back().second)
            windows.back().second = std::max(windows.back().second, hi);
        else
            windows.emplace_back(lo, hi);
    }

    std::vector<Span> gaps;
    double cursor = a;
    for (const auto& [lo, hi] : windows) {
        if (lo > cursor)
            gaps.emplace_back(cursor, lo);
        cursor = hi;
    }
    if (cursor < b)
        gaps.emplace_back(cursor, b);

    // inter-peak spans: certify with the condition (a) envelope when the
    // bound fits in the skip budget, otherwise integrate them like windows
    double skip_error = 0.0;
    std::vector<Span> regions = windows;
    const double skip_budget = gaps.empty() ? 0.0 : 0.25 * tol / static_cast<double>(gaps.size());
    for (const auto& [lo, hi] : gaps) {
        const double d_lo = std::abs(lo - std::nearbyint(lo));
        const double d_hi = std::abs(hi - std::nearbyint(hi));
        const double dist = std::min(d_lo, d_hi);  // spans contain no integer
        double sup_f = 0.0;
        for (int i = 0; i <= 32; ++i) {
            const double x = lo + (hi - lo) * (static_cast<double>(i) / 32.0);
            sup_f = std::max(sup_f, std::abs(f.evaluator(x)));
        }
        total.evaluations += 33;
        const double bound = dist > 0.0
                                 ? (hi - lo) * sup_f * phi_envelope(n, dist)
                                 : std::numeric_limits<double>::infinity();
        if (bound <= skip_budget) {
            skip_error += bound;
            total.panels += 1;
        } else {
            regions.push_back({lo, hi});
        }
    }
    std::sort(regions.begin(), regions.end());

    if (regions.empty()) {
        total.error_estimate = skip_error;
        total.panels = std::max<std::uint64_t>(total.panels, 1);
        return total;
    }

    const auto integrand = [n, &f](double x) { return phi_n(n, x) * f.evaluator(x); };
    const double region_budget = 0.5 * tol / static_cast<double>(regions.size());
    const std::uint64_t region_cap =
        std::max<std::uint64_t>(kPanelCap / regions.size(), 1024);

    std::vector<QuadratureResult> parts(regions.size());
    parallel_for(regions.size(), [&](std::size_t i) {
        parts[i] = integrate_adaptive(integrand, regions[i].first, regions[i].second,
                                      region_budget, region_cap);
    });

    double error = skip_error;
    for (const auto& part : parts) {  // ascending region order: deterministic
        total.value += part.value;
        error += part.error_estimate;
        total.panels += part.panels;
        total.evaluations += part.evaluations;
    }
    total.error_estimate = error;
    if (total.error_estimate > tol)
        throw std::runtime_error("integrate_against: tolerance unachievable");
    return total;
}

double theorem2_rhs(const TestFunction& f, const KernelInterval& iv) {
    if (!f.evaluator)
        throw std::invalid_argument("theorem2_rhs: test function has no evaluator");
    const std::int64_t m0 = iv.eta1.ceil();
    const std::int64_t m1 = iv.eta2.floor();
    double sum = 0.0;
    for (std::int64_t m = m0; m <= m1; ++m)
        sum += f.evaluator(static_cast<double>(m));
    if (iv.endpoint1_integer)
        sum -= 0.5 * f.evaluator(iv.eta1.to_double());
    if (iv.endpoint2_integer)
        sum -= 0.5 * f.evaluator(iv.eta2.to_double());
    return sum;
}

std::vector<VerifyRecord> theorem2_verify(const TestFunction& f, const KernelInterval& iv,
                                          const std::vector<std::uint64_t>& n_schedule,
                                          double tol) {
    const double rhs = theorem2_rhs(f, iv);
    std::vector<VerifyRecord> records;
    records.reserve(n_schedule.size());
    for (auto n : n_schedule) {
        const double lhs = integrate_against(n, f, iv, tol).value;
        records.push_back({n, lhs, rhs, std::abs(lhs - rhs)});
    }
    return records;
}

std::vector<Lemma32Record> lemma32_verify(const TestFunction& f, Lemma32Variant variant,
                                          const Rational& eta,
                                          const std::vector<std::uint64_t>& n_schedule,
                                          double tol) {
    if (!f.evaluator)
        throw std::invalid_argument("lemma32_verify: test function has no evaluator");
    KernelInterval iv;
    double limit;
    if (variant == Lemma32Variant::interior) {
        if (!(Rational(0) < eta && eta < Rational(1)))
            throw std::invalid_argument("lemma32_verify: eta must lie in (0, 1)");
        iv = KernelInterval::make(-eta, Rational(1) - eta);
        limit = f.evaluator(0.0);
    } else {
        iv = KernelInterval::make(Rational(0), Rational(1));
        limit = 0.5 * (f.evaluator(0.0) + f.evaluator(1.0));
    }
    std::vector<Lemma32Record> records;
    records.reserve(n_schedule.size());
    for (auto n : n_schedule) {
        const double value = integrate_against(n, f, iv, tol).value;
        records.push_back({n, value, limit, std::abs(value - limit)});
    }
    return records;
}

}  // namespace divlab
