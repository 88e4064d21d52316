#pragma once
// Adaptive panel quadrature: fixed-order Gauss-Legendre (order 32) per panel,
// bisected until two refinement levels agree within the local budget.

#include <cstdint>
#include <functional>

namespace divlab {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;   // >= 0
    std::uint64_t panels = 1;
    std::uint64_t evaluations = 0;
};

inline constexpr std::uint64_t kPanelCap = 1'000'000;

// Integrates fn over [a, b] to absolute tolerance `tol`.  Throws
// std::runtime_error once more than `panel_cap` panels have been spent.
QuadratureResult integrate_adaptive(const std::function<double(double)>& fn,
                                    double a, double b, double tol,
                                    std::uint64_t panel_cap = kPanelCap);

}  // namespace divlab
