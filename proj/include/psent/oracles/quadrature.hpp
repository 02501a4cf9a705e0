#pragma once

#include <complex>
#include <functional>

#include "psent/densecoding.hpp"
#include "psent/fock_core.hpp"

namespace psent::oracles {

using Integrand2D = std::function<double(double, double)>;

/// Nested adaptive Gauss-Kronrod over [x0, x1] x [y0, y1].
double integrate_2d(const Integrand2D& f, double x0, double x1, double y0, double y1, double rel_tol = 1e-10);

/// Average teleportation fidelity by integrating the (x, p)-resolved
/// integrand over the square of half-width 12 about its peak.
double fidelity_by_quadrature(Resource kind, std::complex<double> alpha0, const ModelParams& params,
                              double rel_tol = 1e-10);

/// Channel matrix by integrating the homodyne density over each decision
/// quadrant, truncated at sqrt2 beta + 12 from the origin.
ChannelMatrix4 channel_by_quadrature(Resource kind, const ModelParams& params, const SignalParams& signal,
                                     double rel_tol = 1e-8);

/// Mixed partial d^2/dmu1 dmu2 of the pure-resource teleportation
/// generating function at mu1 = mu2 = 0, by Richardson-extrapolated central
/// differences with base step h. This is the integrand before the
/// derivatives are carried out in closed form.
double pure_fidelity_integrand_fd(double x, double p, std::complex<double> alpha0, const ModelParams& params,
                                  double h = 1e-4);

}  // namespace psent::oracles
