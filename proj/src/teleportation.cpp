#include "psent/teleportation.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace psent {

namespace {

void require_detection(const ModelParams& params, const char* what) {
  params.validate();
  if (params.lambda == 0.0 || params.reflectance() == 0.0) {
    throw ZeroDetectionProbability(std::string(what) + ": heralding probability is zero");
  }
}

}  // namespace

FidelityResult fid_sq(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw DomainError("lambda must lie in [0, 1)");
  return {0.5 * (1.0 + lambda)};
}

FidelityResult fid_pure(const ModelParams& params) {
  require_detection(params, "fid_pure");
  const double l = params.lambda;
  const double c = l * params.transmittance;
  const double r = params.reflectance();
  const double p1 = pdet_pure(params);
  return {(1.0 - l * l) * l * l * r * r * (1.0 - c + 0.5 * c * c) / (2.0 * p1 * std::pow(1.0 - c, 3))};
}

FidelityResult fid_mixed(const ModelParams& params) {
  require_detection(params, "fid_mixed");
  const double l = params.lambda;
  const double l2 = l * l;
  const double t = params.transmittance;
  const std::array<double, 2> gamma{0.0, params.reflectance()};
  const double pdet = pdet_mixed(params);
  double total = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double denom = 1.0 - l * t - l2 * gamma[i] * gamma[j] - 0.5 * l2 * t * (gamma[i] + gamma[j]);
      const double f_ij = (1.0 - l2) / (2.0 * pdet * denom);
      total += ((i + j) % 2 == 0 ? 1.0 : -1.0) * f_ij;
    }
  }
  return {total};
}

FidelityResult fidelity(Resource resource, const ModelParams& params) {
  switch (resource) {
    case Resource::Sq: params.validate(); return fid_sq(params.lambda);
    case Resource::Pure: return fid_pure(params);
    case Resource::Mixed: return fid_mixed(params);
  }
  throw DomainError("unknown resource");
}

double fid_xp_integrand(Resource kind, double x, double p, std::complex<double> alpha0, const ModelParams& params) {
  // Squared distance of (x, p) from the peak (sqrt2 Re alpha0, sqrt2 Im alpha0);
  // |Q|^2 = dist2 / 2 with Q = (x + ip)/sqrt2 - alpha0.
  const double dx = x - std::numbers::sqrt2 * alpha0.real();
  const double dp = p - std::numbers::sqrt2 * alpha0.imag();
  const double dist2 = dx * dx + dp * dp;
  const double l = params.lambda;
  const double l2 = l * l;
  const double t = params.transmittance;
  const double r = params.reflectance();

  switch (kind) {
    case Resource::Pure: {
      require_detection(params, "fid_xp_integrand");
      // d^2/dmu1 dmu2 of 1/((1-l mu1)(1-l mu2)) exp(-(2 - lT/(1-l mu1) - lT/(1-l mu2)) q)
      // at mu = 0 factorizes into [l (1 + lT q)]^2 exp(-2 (1 - lT) q).
      const double q = 0.5 * dist2;
      const double c = l * t;
      const double g = 1.0 + c * q;
      return r * r * (1.0 - l2) * l2 / (2.0 * std::numbers::pi * pdet_pure(params)) * g * g *
             std::exp(-2.0 * (1.0 - c) * q);
    }
    case Resource::Mixed: {
      require_detection(params, "fid_xp_integrand");
      const std::array<double, 2> gamma{0.0, r};
      const double pref = 1.0 / (2.0 * std::numbers::pi * pdet_mixed(params));
      double total = 0.0;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const double gg = gamma[i] * gamma[j];
          const double width = (1.0 - l * t - l2 * gg - 0.5 * l2 * t * (gamma[i] + gamma[j])) / (1.0 - l2 * gg);
          total += ((i + j) % 2 == 0 ? 1.0 : -1.0) * pref * (1.0 - l2) / (1.0 - l2 * gg) * std::exp(-width * dist2);
        }
      }
      return total;
    }
    case Resource::Sq:
      break;
  }
  throw DomainError("fid_xp_integrand is defined for the pure and mixed resources only");
}

}  // namespace psent
