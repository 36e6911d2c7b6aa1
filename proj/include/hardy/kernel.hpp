#pragma once

#include "hardy/linalg.hpp"
#include "hardy/numerics.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hardy {

/// Half-width d > 0 of the strip on which target functions are analytic.
struct StripParam {
    double d;
    explicit StripParam(double half_width);
};

/// Strictly increasing finite sampling points together with the strip they
/// live on.
struct NodeSet {
    std::vector<double> nodes;
    StripParam d;

    NodeSet(std::vector<double> nodes, StripParam d);
    std::size_t size() const { return nodes.size(); }
};

/// Conformal map of the strip to the unit disc restricted to the real
/// axis: tanh(pi*x/(4d)). Odd, range (-1, 1).
double t_map(double x, StripParam d);

/// T'(y)/T'(0) = sech^2(pi*y/(4d)); the derivative factor of the
/// interpolation basis.
double t_map_deriv_ratio(double y, StripParam d);

/// Potential kernel K(x) = -log|tanh(pi*x/(4d))|. Even, positive,
/// strictly decreasing on (0, inf); K(0) = +inf (a legal return).
double kernel_K(double x, StripParam d);

/// K'(x) = -2c/sinh(2cx), c = pi/(4d). Throws DomainError at x = 0.
double kernel_K_deriv(double x, StripParam d);

/// K''(x) = 4c^2 cosh(2cx)/sinh^2(2cx) > 0.
double kernel_K_second(double x, StripParam d);

/// Epsilon-average (1/eps) * int_0^eps K(|x|+z) dz. Finite everywhere,
/// below K pointwise, increasing to K as eps decreases.
double kernel_smoothed(double x, StripParam d, double eps, const Tolerance& tol = {});

/// Fourier transform of K: pi*tanh(d*w)/w, with the limit pi*d at w = 0.
double kernel_fourier(double omega, StripParam d);

/// Log-magnitude of the Blaschke-type product with node k excluded:
/// sum_{j != k} log|T_d(x - a_j)|. Returns -inf when x coincides with a
/// non-excluded node.
double log_blaschke(double x, std::optional<std::size_t> k_excluded,
                    const NodeSet& nodes);

/// Dense symmetric matrix of smoothed-kernel values
/// G_ij = K_eps(points_i - points_j).
struct Matrix;
Matrix gram_matrix_smoothed(std::span<const double> points, StripParam d,
                            double eps, const Tolerance& tol = {});

} // namespace hardy

#include "hardy/linalg.hpp"
