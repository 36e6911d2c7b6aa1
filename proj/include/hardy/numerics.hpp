#pragma once

#include <functional>

namespace hardy {

/// Error targets shared by the quadrature, minimization and root-finding
/// routines. max_iter caps refinements/iterations so a single integral
/// stays under ~6e5 integrand evaluations.
struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_iter = 20000;

    void validate() const; // throws ParamError on nonpositive fields
};

using RealFn = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b].
/// The rule is open: f is never evaluated at a or b, so integrable
/// endpoint singularities are admissible. Throws NonConvergence when the
/// subdivision budget is exhausted before the error target
/// max(abs_tol, rel_tol*|result|) is met.
double integrate(const RealFn& f, double a, double b, const Tolerance& tol = {});

/// Integral of f over (0, inf) via the substitution x = t/(1-t).
double integrate_halfline(const RealFn& f, const Tolerance& tol = {});

struct ScalarMinimum {
    double x = 0.0;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Golden-section search on [lo, hi]. For unimodal f the result is the
/// global minimizer of the interval; endpoints are never evaluated.
ScalarMinimum minimize_scalar(const RealFn& f, double lo, double hi,
                              const Tolerance& tol = {});

/// Root of a strictly increasing g with g(0+) < 0 and g -> +inf:
/// bracket expansion by doubling from 1, then bisection to width abs_tol.
/// Throws BracketFailure if no sign change is found.
double find_root_increasing(const RealFn& g, const Tolerance& tol = {});

} // namespace hardy
