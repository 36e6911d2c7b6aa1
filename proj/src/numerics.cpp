#include "hardy/numerics.hpp"
#include "hardy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace hardy {

void Tolerance::validate() const {
    if (!(abs_tol > 0.0)) throw ParamError("Tolerance: abs_tol must be > 0");
    if (!(rel_tol > 0.0)) throw ParamError("Tolerance: rel_tol must be > 0");
    if (max_iter < 1) throw ParamError("Tolerance: max_iter must be >= 1");
}

namespace {

// 15-point Kronrod / 7-point Gauss pair on [-1,1] (QUADPACK constants).
// All abscissae are strictly interior, so panel endpoints are never touched.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelEstimate {
    double value = 0.0;
    double error = 0.0;
};

PanelEstimate gauss_kronrod_15(const RealFn& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);

    double fv1[7], fv2[7];
    const double fc = f(center);
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * kXgk[j];
        fv1[j] = f(center - absc);
        fv2[j] = f(center + absc);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    PanelEstimate est;
    est.value = resk * hlgth;
    resasc *= std::abs(hlgth);
    double err = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (!std::isfinite(est.value) || !std::isfinite(err))
        err = std::numeric_limits<double>::infinity();
    est.error = err;
    return est;
}

struct Panel {
    double a, b;
    double value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

} // namespace

double integrate(const RealFn& f, double a, double b, const Tolerance& tol) {
    tol.validate();
    if (!(a < b)) throw ParamError("integrate: requires a < b");

    const PanelEstimate first = gauss_kronrod_15(f, a, b);
    std::priority_queue<Panel> queue;
    queue.push(Panel{a, b, first.value, first.error});
    double total_value = first.value;
    double total_error = first.error;

    for (int iter = 0; iter < tol.max_iter; ++iter) {
        if (total_error <= std::max(tol.abs_tol, tol.rel_tol * std::abs(total_value)))
            return total_value;
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // panel already at floating-point resolution; accept as is
            queue.push(Panel{worst.a, worst.b, worst.value, 0.0});
            total_error -= worst.error;
            continue;
        }
        const PanelEstimate left = gauss_kronrod_15(f, worst.a, mid);
        const PanelEstimate right = gauss_kronrod_15(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(Panel{worst.a, mid, left.value, left.error});
        queue.push(Panel{mid, worst.b, right.value, right.error});
    }
    if (total_error <= std::max(tol.abs_tol, tol.rel_tol * std::abs(total_value)))
        return total_value;
    throw NonConvergence("integrate: subdivision budget exhausted before error target");
}

double integrate_halfline(const RealFn& f, const Tolerance& tol) {
    const auto transformed = [&f](double t) {
        const double one_minus = 1.0 - t;
        const double x = t / one_minus;
        const double fx = f(x);
        if (fx == 0.0) return 0.0; // avoid 0 * inf at the t -> 1 edge
        return fx / (one_minus * one_minus);
    };
    return integrate(transformed, 0.0, 1.0, tol);
}

ScalarMinimum minimize_scalar(const RealFn& f, double lo, double hi, const Tolerance& tol) {
    tol.validate();
    if (!(lo < hi)) throw ParamError("minimize_scalar: requires lo < hi");

    constexpr double kInvPhi = 0.6180339887498949; // 1/phi
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);

    ScalarMinimum result;
    for (int iter = 0; iter < tol.max_iter; ++iter) {
        const double mid = 0.5 * (a + b);
        if (b - a <= tol.abs_tol + tol.rel_tol * std::abs(mid)) {
            result.converged = true;
            result.iterations = iter;
            break;
        }
        result.iterations = iter + 1;
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    if (f1 <= f2) {
        result.x = x1;
        result.value = f1;
    } else {
        result.x = x2;
        result.value = f2;
    }
    return result;
}

double find_root_increasing(const RealFn& g, const Tolerance& tol) {
    tol.validate();
    double lo = 0.0; // g(0+) < 0 by precondition; never evaluated
    double hi = 1.0;
    double ghi = g(hi);
    int expansions = 0;
    while (!(ghi > 0.0)) {
        lo = hi;
        hi *= 2.0;
        ghi = g(hi);
        if (++expansions > 200)
            throw BracketFailure("find_root_increasing: no sign change within expansion budget");
    }
    for (int iter = 0; iter < tol.max_iter; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= std::max(tol.abs_tol, tol.rel_tol * std::abs(mid)) || mid <= lo || mid >= hi)
            return mid;
        if (g(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace hardy
