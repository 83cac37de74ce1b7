#include "rrslink/numerics.hpp"

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <queue>
#include <vector>

namespace rrslink {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (positive half; the
// rule is symmetric). Odd-indexed Kronrod nodes are the embedded Gauss-7
// nodes.
constexpr int kKronrod = 15;
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Rule1d {
    double node[kKronrod];
    double wk[kKronrod];
    double wg[kKronrod];  // zero at pure-Kronrod nodes
};

Rule1d make_rule() {
    Rule1d r{};
    for (int i = 0; i < kKronrod; ++i) {
        const int half = i < 8 ? i : 14 - i;
        const double sign = i < 8 ? -1.0 : 1.0;
        r.node[i] = sign * kXgk[half] * (i < 8 ? 1.0 : 1.0);
        if (i < 8) r.node[i] = -kXgk[half];
        r.wk[i] = kWgk[half];
        r.wg[i] = (half % 2 == 1) ? kWg[half / 2] : 0.0;
    }
    r.node[7] = 0.0;
    return r;
}

const Rule1d& rule() {
    static const Rule1d r = make_rule();
    return r;
}

struct Panel {
    double y0, y1, z0, z1;
    double value;  // K15 x K15 estimate
    double err;    // |K15xK15 - G7xG7|
    std::uint64_t id;
};

struct PanelWorse {
    bool operator()(const Panel& a, const Panel& b) const {
        if (a.err != b.err) return a.err < b.err;
        return a.id > b.id;  // deterministic tie-break: older panel first
    }
};

void evaluate_panel(const std::function<double(double, double)>& f, Panel& p) {
    const Rule1d& r = rule();
    const double cy = 0.5 * (p.y0 + p.y1), hy = 0.5 * (p.y1 - p.y0);
    const double cz = 0.5 * (p.z0 + p.z1), hz = 0.5 * (p.z1 - p.z0);
    double vals[kKronrod][kKronrod];
    for (int i = 0; i < kKronrod; ++i) {
        const double y = cy + hy * r.node[i];
        for (int j = 0; j < kKronrod; ++j) {
            const double z = cz + hz * r.node[j];
            vals[i][j] = f(y, z);
        }
    }
    double ik = 0.0, ig = 0.0;
    for (int i = 0; i < kKronrod; ++i) {
        double row_k = 0.0, row_g = 0.0;
        for (int j = 0; j < kKronrod; ++j) {
            row_k += r.wk[j] * vals[i][j];
            row_g += r.wg[j] * vals[i][j];
        }
        ik += r.wk[i] * row_k;
        ig += r.wg[i] * row_g;
    }
    const double scale = hy * hz;
    p.value = ik * scale;
    p.err = std::abs(ik - ig) * scale;
    if (!std::isfinite(p.value))
        throw std::domain_error("integrate_2d: non-finite integrand value");
}

QuadratureResult adaptive_rect(const std::function<double(double, double)>& f,
                               const RectRegion& region, const QuadratureOptions& opts) {
    if (!(region.y_max > region.y_min) || !(region.z_max > region.z_min))
        throw std::invalid_argument("integrate_2d: degenerate region");
    if (!(opts.rel_tol > 0.0) && !(opts.abs_tol > 0.0))
        throw std::invalid_argument("integrate_2d: tolerances must be positive");

    std::uint64_t next_id = 0;
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;
    std::vector<Panel> settled;  // panels too small to matter get parked here

    Panel root{region.y_min, region.y_max, region.z_min, region.z_max, 0.0, 0.0, next_id++};
    evaluate_panel(f, root);
    queue.push(root);

    double total_value = root.value;
    double total_err = root.err;
    std::size_t panels = 1;

    auto tolerance = [&](double value) {
        return std::max(opts.rel_tol * std::abs(value), opts.abs_tol);
    };

    while (total_err > tolerance(total_value) && panels + 3 <= opts.max_panels &&
           !queue.empty()) {
        Panel worst = queue.top();
        queue.pop();
        if (worst.err <= 0.0) {  // nothing left to gain
            settled.push_back(worst);
            break;
        }
        total_value -= worst.value;
        total_err -= worst.err;

        const double ym = 0.5 * (worst.y0 + worst.y1);
        const double zm = 0.5 * (worst.z0 + worst.z1);
        const Panel children_spec[4] = {
            {worst.y0, ym, worst.z0, zm, 0, 0, 0},
            {ym, worst.y1, worst.z0, zm, 0, 0, 0},
            {worst.y0, ym, zm, worst.z1, 0, 0, 0},
            {ym, worst.y1, zm, worst.z1, 0, 0, 0}};
        for (const Panel& spec : children_spec) {
            Panel child = spec;
            child.id = next_id++;
            evaluate_panel(f, child);
            total_value += child.value;
            total_err += child.err;
            queue.push(child);
        }
        panels += 3;
    }

    // Final reduction in panel-id order for a deterministic, accurate sum.
    std::vector<Panel> leaves = std::move(settled);
    while (!queue.empty()) {
        leaves.push_back(queue.top());
        queue.pop();
    }
    std::sort(leaves.begin(), leaves.end(),
              [](const Panel& a, const Panel& b) { return a.id < b.id; });
    CompensatedSum value_sum, err_sum;
    for (const Panel& p : leaves) {
        value_sum.add(p.value);
        err_sum.add(p.err);
    }

    QuadratureResult out;
    out.value = value_sum.value();
    out.error_estimate = err_sum.value();
    out.panels_used = panels;
    out.converged = out.error_estimate <= tolerance(out.value);
    return out;
}

}  // namespace

QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              const RectRegion& region, const QuadratureOptions& opts) {
    return adaptive_rect(f, region, opts);
}

QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              const DiscRegion& region, const QuadratureOptions& opts) {
    if (!(region.radius > 0.0))
        throw std::invalid_argument("integrate_2d: disc radius must be positive");
    auto polar = [&f](double rho, double theta) {
        return f(rho * std::cos(theta), rho * std::sin(theta)) * rho;
    };
    const RectRegion rect{0.0, region.radius, 0.0, 2.0 * std::numbers::pi};
    return adaptive_rect(polar, rect, opts);
}

SolverResult find_root_bracketed(const std::function<double(double)>& f, double lo,
                                 double hi, double tol) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, 0.0, 0, true};
    if (fb == 0.0) return {b, 0.0, 0, true};
    if ((fa > 0.0) == (fb > 0.0))
        throw NoBracketError("find_root_bracketed: f(lo) and f(hi) have the same sign");

    // Brent: inverse quadratic / secant steps with a guaranteed bisection
    // fallback.
    double c = a, fc = fa;
    double d = b - a, e = d;
    int iter = 0;
    const int max_iter = 200;
    for (; iter < max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                            0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || std::abs(fb) <= tol)
            return {b, fb, iter, true};
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (std::abs(d) > tol1)
            b += d;
        else
            b += (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    return {b, fb, iter, false};
}

SolverResult minimize_unimodal(const std::function<double(double)>& f, double lo,
                               double hi, double tol) {
    if (!(hi > lo)) throw std::invalid_argument("minimize_unimodal: empty interval");
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    int iter = 0;
    const int max_iter = 400;
    while (b - a > tol && iter < max_iter) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
        ++iter;
    }
    const double x = 0.5 * (a + b);
    return {x, f(x), iter, b - a <= tol};
}

}  // namespace rrslink
