#include "psent/densecoding.hpp"

#include <algorithm>
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

double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// sum_k (1/4) I_k log2 I_k with I_k = 4 P_k; the one-axis value enters twice.
double information_from_quadrants(const QuadrantProbabilities& q) {
  return 0.25 * (xlog2(4.0 * q.both) + 2.0 * xlog2(4.0 * q.one) + xlog2(4.0 * q.none));
}

int matching_axes(int sent, int decided) {
  return static_cast<int>((sent >> 1) == (decided >> 1)) + static_cast<int>((sent & 1) == (decided & 1));
}

// (1 + s_x e)(1 + s_p e) for the three agreement classes, with 1 - e = erfc.
QuadrantProbabilities gaussian_quadrants(double z) {
  const double plus = 1.0 + psent::erf(z);
  const double minus = psent::erfc(z);
  return {plus * plus, plus * minus, minus * minus};
}

}  // namespace

void SignalParams::validate() const {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw DomainError("beta must be finite and non-negative");
}

double SignalParams::x_shift(int symbol) const { return ((symbol >> 1) == 0 ? 1.0 : -1.0) * std::numbers::sqrt2 * beta; }
double SignalParams::p_shift(int symbol) const { return ((symbol & 1) == 0 ? 1.0 : -1.0) * std::numbers::sqrt2 * beta; }

double ChannelMatrix4::max_row_deviation() const {
  double worst = 0.0;
  for (const auto& row : probs) {
    double s = 0.0;
    for (double v : row) s += v;
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

KernelDerivatives pure_kernel_derivatives(int matching_axes, double width2, double beta, double mu) {
  if (matching_axes < 0 || matching_axes > 2) throw DomainError("matching_axes must be 0, 1 or 2");
  const double z = beta * std::sqrt(width2 * mu);
  const double z1 = z / (2.0 * mu);
  const double z2 = -z / (4.0 * mu * mu);
  const double g = 2.0 / std::sqrt(std::numbers::pi) * std::exp(-z * z);
  const double e1 = g * z1;
  const double e2 = g * (z2 - 2.0 * z * z1 * z1);

  // Factors (1 + e) and (1 - e) with their mu-derivatives.
  const double plus = 1.0 + psent::erf(z);
  const double minus = psent::erfc(z);
  double h = 0.0, h1 = 0.0, h2 = 0.0;
  switch (matching_axes) {
    case 2:
      h = plus * plus;
      h1 = 2.0 * plus * e1;
      h2 = 2.0 * (e1 * e1 + plus * e2);
      break;
    case 1:
      h = plus * minus;
      h1 = e1 * minus - plus * e1;
      h2 = e2 * minus - 2.0 * e1 * e1 - plus * e2;
      break;
    default:
      h = minus * minus;
      h1 = -2.0 * minus * e1;
      h2 = 2.0 * (e1 * e1 - minus * e2);
      break;
  }
  return {h / mu, h1 / mu - h / (mu * mu), h2 / mu - 2.0 * h1 / (mu * mu) + 2.0 * h / (mu * mu * mu)};
}

QuadrantProbabilities quadrant_probabilities(Resource kind, const ModelParams& params, const SignalParams& signal) {
  params.validate();
  signal.validate();
  const double l = params.lambda;
  const double l2 = l * l;
  const double t = params.transmittance;
  const double r = params.reflectance();
  const double beta = signal.beta;

  switch (kind) {
    case Resource::Sq: {
      const auto q = gaussian_quadrants(std::sqrt((1.0 + l) / (1.0 - l)) * beta);
      return {0.25 * q.both, 0.25 * q.one, 0.25 * q.none};
    }
    case Resource::Pure: {
      require_detection(params, "quadrant_probabilities");
      const double c = l * t;
      const double width2 = (1.0 + c) / (1.0 - c);
      const double k = c / (1.0 + c);
      const double pref = (1.0 - l2) * l2 * r * r / (pdet_pure(params) * std::pow(1.0 - c, 3) * (1.0 + c));
      // D_mu = pref [k^2 d^2/dmu^2 + 2k d/dmu + 1], applied at mu = 1.
      auto apply = [&](int axes) {
        const auto d = pure_kernel_derivatives(axes, width2, beta, 1.0);
        return 0.25 * pref * (k * k * d.second + 2.0 * k * d.first + d.value);
      };
      return {apply(2), apply(1), apply(0)};
    }
    case Resource::Mixed: {
      require_detection(params, "quadrant_probabilities");
      const double gamma[2] = {0.0, r};
      const double pdet = pdet_mixed(params);
      QuadrantProbabilities total;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const double a_ij = 1.0 - l2 * (t + gamma[i]) * (t + gamma[j]);
          const double d_ij = (1.0 - l * t) * (1.0 - l * t) - l2 * gamma[i] * gamma[j];
          const double c_ij = 0.25 / pdet * (1.0 - l2) / a_ij;
          const double omega = std::sqrt(a_ij / d_ij);
          const auto q = gaussian_quadrants(omega * beta);
          const double sign = (i + j) % 2 == 0 ? 1.0 : -1.0;
          total.both += sign * c_ij * q.both;
          total.one += sign * c_ij * q.one;
          total.none += sign * c_ij * q.none;
        }
      }
      return total;
    }
  }
  throw DomainError("unknown resource");
}

ChannelMatrix4 channel_matrix(Resource kind, const ModelParams& params, const SignalParams& signal) {
  const auto q = quadrant_probabilities(kind, params, signal);
  // clamp round-off at the ends of [0, 1]
  const double by_axes[3] = {std::clamp(q.none, 0.0, 1.0), std::clamp(q.one, 0.0, 1.0), std::clamp(q.both, 0.0, 1.0)};
  ChannelMatrix4 ch;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) ch.probs[a][b] = by_axes[matching_axes(a, b)];
  return ch;
}

double mutual_information(const ChannelMatrix4& channel) {
  constexpr double prior = 0.25;
  std::array<double, 4> output{};
  for (int b = 0; b < 4; ++b)
    for (int a = 0; a < 4; ++a) output[b] += prior * channel.probs[a][b];
  double info = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const double pba = channel.probs[a][b];
      if (pba > 0.0 && output[b] > 0.0) info += prior * pba * std::log2(pba / output[b]);
    }
  }
  return info;
}

double i_sq(double lambda, double beta) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw DomainError("lambda must lie in [0, 1)");
  SignalParams{beta}.validate();
  const double z = std::sqrt((1.0 + lambda) / (1.0 - lambda)) * beta;
  return xlog2(1.0 + psent::erf(z)) + xlog2(psent::erfc(z));
}

double i_pure(const ModelParams& params, const SignalParams& signal) {
  return information_from_quadrants(quadrant_probabilities(Resource::Pure, params, signal));
}

double i_mixed(const ModelParams& params, const SignalParams& signal) {
  return information_from_quadrants(quadrant_probabilities(Resource::Mixed, params, signal));
}

double dense_coding_information(Resource kind, const ModelParams& params, const SignalParams& signal) {
  switch (kind) {
    case Resource::Sq: params.validate(); return i_sq(params.lambda, signal.beta);
    case Resource::Pure: return i_pure(params, signal);
    case Resource::Mixed: return i_mixed(params, signal);
  }
  throw DomainError("unknown resource");
}

double homodyne_density(Resource kind, double x, double p, double x_s, double p_s, const ModelParams& params) {
  params.validate();
  const double s = (x - x_s) * (x - x_s) + (p - p_s) * (p - p_s);
  const double l = params.lambda;
  const double l2 = l * l;
  const double t = params.transmittance;
  const double r = params.reflectance();
  switch (kind) {
    case Resource::Sq: {
      const double var = (1.0 - l) / (1.0 + l);
      return std::exp(-s / (2.0 * var)) / (2.0 * std::numbers::pi * var);
    }
    case Resource::Pure: {
      require_detection(params, "homodyne_density");
      const double c = l * t;
      const double poly = 1.0 - c / (2.0 * (1.0 - c)) * s;
      return (1.0 - l2) * l2 * r * r / (2.0 * std::numbers::pi * pdet_pure(params) * std::pow(1.0 - c, 4)) * poly * poly *
             std::exp(-(1.0 + c) / (2.0 * (1.0 - c)) * s);
    }
    case Resource::Mixed: {
      require_detection(params, "homodyne_density");
      const double gamma[2] = {0.0, r};
      const double pref = 1.0 / (2.0 * std::numbers::pi * pdet_mixed(params));
      double total = 0.0;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const double a_ij = 1.0 - l2 * (t + gamma[i]) * (t + gamma[j]);
          const double d_ij = (1.0 - l * t) * (1.0 - l * t) - l2 * gamma[i] * gamma[j];
          total += ((i + j) % 2 == 0 ? 1.0 : -1.0) * pref * (1.0 - l2) / d_ij * std::exp(-a_ij / (2.0 * d_ij) * s);
        }
      }
      return total;
    }
  }
  throw DomainError("unknown resource");
}

}  // namespace psent
