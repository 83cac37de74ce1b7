#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>

namespace rrslink {

/// Neumaier-compensated accumulator. Deterministic for a fixed add order.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct RectRegion {
    double y_min, y_max;
    double z_min, z_max;
};

/// Disc centered at the origin.
struct DiscRegion {
    double radius;
};

struct QuadratureOptions {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    std::size_t max_panels = 200000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t panels_used = 0;
    bool converged = false;  // false means the panel budget ran out first
};

// Adaptive 2-D quadrature with tensor Gauss-Kronrod 7/15 panels. The error
// estimate is the conservative sum of per-panel |K15 - G7| differences.
// Deterministic: fixed subdivision rule, fixed final reduction order.
// Discs integrate through a polar mapping, which keeps panels aligned with
// radially structured integrands.
QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              const RectRegion& region,
                              const QuadratureOptions& opts = {});
QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              const DiscRegion& region,
                              const QuadratureOptions& opts = {});

struct SolverResult {
    double abscissa = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct NoBracketError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Brent root finding on [lo, hi]; requires f(lo) * f(hi) <= 0, throws
/// NoBracketError otherwise. Stops when |f| <= tol or the bracket width
/// drops below tol.
SolverResult find_root_bracketed(const std::function<double(double)>& f, double lo,
                                 double hi, double tol = 1e-12);

/// Golden-section minimization of a unimodal function on [lo, hi]; the
/// abscissa is within tol of the minimizer.
SolverResult minimize_unimodal(const std::function<double(double)>& f, double lo,
                               double hi, double tol = 1e-9);

}  // namespace rrslink
