#include "psent/oracles/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "psent/teleportation.hpp"

namespace psent::oracles {

namespace {

constexpr double kHalfWidth = 12.0;
constexpr unsigned kMaxDepth = 20;

}  // namespace

double integrate_2d(const Integrand2D& f, double x0, double x1, double y0, double y1, double rel_tol) {
  using boost::math::quadrature::gauss_kronrod;
  const double inner_tol = rel_tol * 1e-2;
  auto outer = [&](double x) {
    return gauss_kronrod<double, 31>::integrate([&](double y) { return f(x, y); }, y0, y1, kMaxDepth, inner_tol);
  };
  return gauss_kronrod<double, 31>::integrate(outer, x0, x1, kMaxDepth, rel_tol);
}

double fidelity_by_quadrature(Resource kind, std::complex<double> alpha0, const ModelParams& params, double rel_tol) {
  const double xc = std::numbers::sqrt2 * alpha0.real();
  const double pc = std::numbers::sqrt2 * alpha0.imag();
  return integrate_2d([&](double x, double p) { return fid_xp_integrand(kind, x, p, alpha0, params); },
                      xc - kHalfWidth, xc + kHalfWidth, pc - kHalfWidth, pc + kHalfWidth, rel_tol);
}

ChannelMatrix4 channel_by_quadrature(Resource kind, const ModelParams& params, const SignalParams& signal,
                                     double rel_tol) {
  const double extent = std::numbers::sqrt2 * signal.beta + kHalfWidth;
  ChannelMatrix4 ch;
  for (int a = 0; a < 4; ++a) {
    const double xs = signal.x_shift(a);
    const double ps = signal.p_shift(a);
    for (int b = 0; b < 4; ++b) {
      const bool x_pos = (b >> 1) == 0;
      const bool p_pos = (b & 1) == 0;
      ch.probs[a][b] = integrate_2d([&](double x, double p) { return homodyne_density(kind, x, p, xs, ps, params); },
                                    x_pos ? 0.0 : -extent, x_pos ? extent : 0.0, p_pos ? 0.0 : -extent,
                                    p_pos ? extent : 0.0, rel_tol);
    }
  }
  return ch;
}

double pure_fidelity_integrand_fd(double x, double p, std::complex<double> alpha0, const ModelParams& params,
                                  double h) {
  // extended precision keeps the h^-2 cancellation out of the comparison
  using real = long double;
  const real l = params.lambda;
  const real t = params.transmittance;
  const real r = 1.0L - t;
  const real dx = x - std::numbers::sqrt2_v<real> * alpha0.real();
  const real dp = p - std::numbers::sqrt2_v<real> * alpha0.imag();
  const real q = 0.5L * (dx * dx + dp * dp);
  auto gen = [&](real mu1, real mu2) {
    return 1.0L / ((1.0L - l * mu1) * (1.0L - l * mu2)) *
           std::exp(-(2.0L - l * t / (1.0L - l * mu1) - l * t / (1.0L - l * mu2)) * q);
  };
  auto mixed_partial = [&](real step) {
    return (gen(step, step) - gen(step, -step) - gen(-step, step) + gen(-step, -step)) / (4.0L * step * step);
  };
  const real coarse = mixed_partial(h);
  const real fine = mixed_partial(0.5L * h);
  const real derivative = (4.0L * fine - coarse) / 3.0L;
  return static_cast<double>(r * r * (1.0L - l * l) / (2.0L * std::numbers::pi_v<real> * pdet_pure(params)) *
                             derivative);
}

}  // namespace psent::oracles
