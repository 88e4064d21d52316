#pragma once
// The peaked kernel phi_n(x) = sqrt(n pi) cos^{2n}(pi x).
//
// phi_n spikes at every integer with effective width Theta(1/sqrt(n)); its
// mass over one period is I_n = sqrt(n) Gamma(n+1/2)/Gamma(n+1), which
// increases to 1 at rate 1/(8n).  Integrating phi_n against a function f that
// is continuous near the integers picks out sum f(m) over the integers m
// inside the interval, with half weight at integer endpoints:
//
//   lim_n sqrt(n pi) int_{eta1}^{eta2} cos^{2n}(pi x) f(x) dx
//     = sum_{eta1 <= m <= eta2} f(m) - (f(eta1) [eta1 integer] + f(eta2) [eta2 integer]) / 2,
//
// provided eta1, eta2 are both integers or both non-integers.  The discrete
// side sums over the integers lying inside the closed interval; endpoint
// integers count with weight 1/2.

#include <cstdint>
#include <functional>
#include <vector>

#include "divlab/quadrature.hpp"
#include "divlab/rational.hpp"

namespace divlab {

// sqrt(n pi) cos^{2n}(pi x), log-domain power.  Even in x, and
// phi_n(x) = phi_n(1 - x).
double phi_n(std::uint64_t n, double x);

// Pointwise bound sqrt(n pi) (1 - 4 d^2)^n valid for every x at distance
// >= d from the nearest integer (d in (0, 1/2]).
double phi_envelope(std::uint64_t n, double d);

// I_n = sqrt(n) Gamma(n+1/2)/Gamma(n+1) by the exact Wallis-type recurrence
// I_n = I_{n-1} (2n-1)/(2n) sqrt(n/(n-1)), I_1 = sqrt(pi)/2.  Equals
// sqrt(n pi) int_{-1/2}^{1/2} cos^{2n}(pi x) dx.
double normalization_exact(std::uint64_t n);

// I_1..I_n in one pass of the recurrence.
std::vector<double> normalization_sweep(std::uint64_t n_max);

// Integration interval with exact rational endpoints.  Valid intervals have
// eta1 <= eta2 and either both endpoints integer or both non-integer.
struct KernelInterval {
    Rational eta1;
    Rational eta2;
    bool endpoint1_integer = false;
    bool endpoint2_integer = false;

    static KernelInterval make(const Rational& eta1, const Rational& eta2);
};

struct TestFunction {
    std::function<double(double)> evaluator;
    std::vector<Rational> continuity_neighborhoods;  // integers where continuity is asserted
};

struct ConditionARecord {
    std::uint64_t n;
    double envelope;    // sqrt(n pi) (1 - 4 delta^2)^n
    double tail_mass;   // int_{delta < |x| < 1/2} phi_n
};

// Mass of phi_n outside |x| < delta within one period, against the analytic
// envelope.  Asserts tail_mass <= envelope (1 + 1e-8) for every n.
std::vector<ConditionARecord> check_condition_a(const std::vector<std::uint64_t>& n_list,
                                                double delta);

// sqrt(n pi) int_{eta1}^{eta2} cos^{2n}(pi x) f(x) dx with error_estimate <=
// tol.  Panels concentrate in windows of half-width min(1/2, 6/sqrt(n))
// around each integer; between windows the envelope certifies negligible
// spans without spending panels on them.
QuadratureResult integrate_against(std::uint64_t n, const TestFunction& f,
                                   const KernelInterval& iv, double tol);

// The discrete side: sum of f over the integers m with eta1 <= m <= eta2,
// minus half-weights at integer endpoints (decided on the exact rationals).
double theorem2_rhs(const TestFunction& f, const KernelInterval& iv);

struct VerifyRecord {
    std::uint64_t n;
    double lhs;
    double rhs;
    double gap;
};

// lhs/rhs/gap per n in the schedule; the gaps shrink as n grows when f is
// continuous near the integers of the interval.
std::vector<VerifyRecord> theorem2_verify(const TestFunction& f, const KernelInterval& iv,
                                          const std::vector<std::uint64_t>& n_schedule,
                                          double tol);

enum class Lemma32Variant {
    interior,       // int_{-eta}^{1-eta} f phi_n -> f(0), eta in (0,1)
    unit_interval,  // int_0^1 f phi_n -> (f(0) + f(1)) / 2
};

struct Lemma32Record {
    std::uint64_t n;
    double value;
    double limit;
    double gap;
};

std::vector<Lemma32Record> lemma32_verify(const TestFunction& f, Lemma32Variant variant,
                                          const Rational& eta,
                                          const std::vector<std::uint64_t>& n_schedule,
                                          double tol);

}  // namespace divlab
