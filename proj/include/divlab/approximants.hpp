#pragma once
// Smooth approximants of the divisor sums.  For alpha > 0, M > 1 and
// x in [0, M],
//
//     C_{alpha,n}(M; x) = sum_{k=1..floor(M)} f_n(k),
//     f_n(t) = t^alpha cos^{2n}(pi x / t)   (0 when t = 0 or x = 0),
//
// is non-increasing in n; at integer x it decreases to the divisor sum
// sigma_alpha(x) (the k | x terms are constant, all others die), and at
// non-integer x it decreases to 0.

#include <cstdint>

#include "divlab/numtheory.hpp"

namespace divlab {

struct ApproximantParams {
    double alpha;     // > 0
    std::uint64_t n;  // >= 1; half the cosine power
    double M;         // > 1; terms run over k = 1..floor(M)
    double x;         // in [0, M]

    void validate() const;  // throws std::invalid_argument
};

// One term t^alpha cos^{2n}(pi x / t), evaluated in the log domain.  When x
// and t are both integers the cosine argument is reduced mod 2t in integer
// arithmetic first, so divisor terms come out as exactly t^alpha at any n.
// Underflow rounds to exactly 0.
double f_n_term(double alpha, std::uint64_t n, double x, double t);

// Same term for an x held only as a prime factorization (x mod 2t is
// obtained by modular exponentiation; the plain value may be astronomically
// large).
double f_n_term(double alpha, std::uint64_t n, const Factorization& x, std::uint64_t t);

// C_{alpha,n}(M; x).  The k-sum is evaluated term-by-term and reduced with a
// fixed pairwise scheme, so the result is identical for any thread count.
double approximant_C(const ApproximantParams& p);

// For positive integer x <= M: sum over the non-divisor k in [1, floor(M)] of
// k^alpha q_k^n with q_k = cos^2(pi x / k) < 1.  Certifies
// 0 <= C_{alpha,n}(M; x) - sigma_alpha(x) <= bound.
double approximant_tail_bound(const ApproximantParams& p);

struct ConvergeResult {
    double value;
    std::uint64_t n_used;
    double tail_bound;
};

// Double n (1, 2, 4, ...) until the certified tail bound drops below tol;
// returns the approximant value at that n.  |value - sigma_alpha(x)| <= tol.
ConvergeResult converge_to_sigma(double alpha, std::uint64_t x, double M, double tol);

}  // namespace divlab
