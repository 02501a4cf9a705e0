#include "psent/fock_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace psent {

namespace {

constexpr int kLogFactorialTableSize = 2048;
constexpr int kMaxSeriesIndex = 500;

const std::array<double, kLogFactorialTableSize>& log_factorial_table() {
  static const auto table = [] {
    std::array<double, kLogFactorialTableSize> t{};
    t[0] = 0.0;
    for (int n = 1; n < kLogFactorialTableSize; ++n) t[n] = t[n - 1] + std::log(static_cast<double>(n));
    return t;
  }();
  return table;
}

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw DomainError("lambda must lie in [0, 1), got " + std::to_string(lambda));
  }
}

void require_detection(const ModelParams& params, const char* what) {
  params.validate();
  if (params.lambda == 0.0 || params.reflectance() == 0.0) {
    throw ZeroDetectionProbability(std::string(what) +
                                   ": heralding probability is zero (lambda * (1 - T) = 0)");
  }
}

// log |xi_nk|; requires 0 <= k <= n and R > 0 whenever k > 0.
double log_abs_bs(int n, int k, double log_t, double log_r) {
  double v = 0.5 * (log_factorial(n) - log_factorial(k) - log_factorial(n - k));
  if (n - k > 0) v += 0.5 * (n - k) * log_t;
  if (k > 0) v += 0.5 * k * log_r;
  return v;
}

}  // namespace

const char* to_string(Resource r) {
  switch (r) {
    case Resource::Sq: return "sq";
    case Resource::Pure: return "pure";
    case Resource::Mixed: return "mixed";
  }
  return "?";
}

void ModelParams::validate() const {
  check_lambda(lambda);
  if (!(transmittance > 0.0 && transmittance <= 1.0)) {
    throw DomainError("transmittance must lie in (0, 1], got " + std::to_string(transmittance));
  }
  if (kmax < 0) throw DomainError("kmax must be non-negative");
  if (!(tail_rel_tol > 0.0)) throw DomainError("tail_rel_tol must be positive");
}

SchmidtState::SchmidtState(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (double c : coeffs_) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("Schmidt coefficients must be finite and non-negative");
  }
}

double SchmidtState::sum() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0.0); }

double SchmidtState::norm_squared() const {
  double s = 0.0;
  for (double c : coeffs_) s += c * c;
  return s;
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial of a negative integer");
  if (n < kLogFactorialTableSize) return log_factorial_table()[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double schmidt_coeff(double lambda, int n) {
  check_lambda(lambda);
  if (n < 0) throw DomainError("Fock index must be non-negative");
  if (n == 0) return std::sqrt(1.0 - lambda * lambda);
  return std::sqrt(1.0 - lambda * lambda) * std::pow(lambda, n);
}

double bs_coeff(int n, int k, double transmittance) {
  if (k < 0 || k > n) throw DomainError("bs_coeff requires 0 <= k <= n");
  if (!(transmittance > 0.0 && transmittance <= 1.0)) throw DomainError("transmittance must lie in (0, 1]");
  const double refl = 1.0 - transmittance;
  if (k > 0 && refl == 0.0) return 0.0;
  const double mag = std::exp(log_abs_bs(n, k, std::log(transmittance), k > 0 ? std::log(refl) : 0.0));
  return (k % 2 == 0) ? mag : -mag;
}

SchmidtState squeezed_vacuum_state(const ModelParams& params) {
  params.validate();
  std::vector<double> c(static_cast<std::size_t>(params.kmax) + 1);
  for (int n = 0; n <= params.kmax; ++n) c[n] = schmidt_coeff(params.lambda, n);
  return SchmidtState(std::move(c));
}

SchmidtState pure_subtracted_state(const ModelParams& params) {
  require_detection(params, "pure_subtracted_state");
  const double norm = std::sqrt(pdet_pure(params));
  const double t = params.transmittance;
  std::vector<double> c(static_cast<std::size_t>(params.kmax) + 1);
  for (int n = 0; n <= params.kmax; ++n) {
    const double xi = bs_coeff(n + 1, 1, t);
    c[n] = schmidt_coeff(params.lambda, n + 1) * xi * xi / norm;
  }
  return SchmidtState(std::move(c));
}

double pdet_pure(const ModelParams& params) {
  params.validate();
  const double l2 = params.lambda * params.lambda;
  const double r = params.reflectance();
  const double x = l2 * params.transmittance * params.transmittance;
  // (1-l^2) l^2 T^2 (1 + l^2T^2) / (1 - l^2T^2)^3 (R/T)^2, with the T^2 cancelled.
  return (1.0 - l2) * l2 * r * r * (1.0 + x) / std::pow(1.0 - x, 3);
}

double pdet_mixed(const ModelParams& params) {
  params.validate();
  const double l2 = params.lambda * params.lambda;
  const double t = params.transmittance;
  const double r = params.reflectance();
  return l2 * r * r * (1.0 + l2 * t) / ((1.0 - l2 * t) * (1.0 - l2 * t * t));
}

double mixed_density_element(const DensityElementKey& key, const ModelParams& params) {
  require_detection(params, "mixed_density_element");
  if (key.m1 < 0 || key.m2 < 0 || key.n1 < 0 || key.n2 < 0) throw DomainError("Fock indices must be non-negative");
  const int shift = key.m1 - key.n1;
  if (shift != key.m2 - key.n2) return 0.0;

  const double lambda = params.lambda;
  const double log_lambda = std::log(lambda);
  const double log_norm = std::log1p(-lambda * lambda);  // log(1 - l^2), from alpha_a alpha_b
  const double log_t = std::log(params.transmittance);
  const double log_r = std::log(params.reflectance());

  // Term i is alpha_a alpha_b xi_{a,i} xi_{a,j} xi_{b,i} xi_{b,j} with
  // a = m1 + i, b = m2 + i, j = i + shift. The four xi signs pair up, so
  // every term is positive. Ordering m1, m2 makes the transpose bit-identical.
  const int m_lo = std::min(key.m1, key.m2);
  const int m_hi = std::max(key.m1, key.m2);
  double sum = 0.0;
  for (int i = std::max(1, 1 - shift); i <= kMaxSeriesIndex; ++i) {
    const int j = i + shift;
    const int a = m_lo + i;
    const int b = m_hi + i;
    const double log_term = log_norm + (a + b) * log_lambda + log_abs_bs(a, i, log_t, log_r) +
                            log_abs_bs(a, j, log_t, log_r) + log_abs_bs(b, i, log_t, log_r) +
                            log_abs_bs(b, j, log_t, log_r);
    const double term = std::exp(log_term);
    sum += term;
    if (term <= params.tail_rel_tol * sum) break;
  }
  return sum / pdet_mixed(params);
}

double mean_photon_mixed(const ModelParams& params) {
  require_detection(params, "mean_photon_mixed");
  const double l2 = params.lambda * params.lambda;
  const double t = params.transmittance;
  const double bracket = l2 * t / std::pow(1.0 - l2, 2) - l2 * t / std::pow(1.0 - l2 * t, 2) -
                         l2 * t * t / std::pow(1.0 - l2 * t, 2) + l2 * t * t / std::pow(1.0 - l2 * t * t, 2);
  return 2.0 * (1.0 - l2) / pdet_mixed(params) * bracket;
}

double mean_photon_sq(double lambda) {
  check_lambda(lambda);
  return 2.0 * lambda * lambda / (1.0 - lambda * lambda);
}

double mean_photon(const SchmidtState& state) {
  double weighted = 0.0;
  for (std::size_t n = 0; n < state.size(); ++n) weighted += static_cast<double>(n) * state[n] * state[n];
  const double norm = state.norm_squared();
  if (norm == 0.0) throw DomainError("mean_photon of an empty state");
  return 2.0 * weighted / norm;
}

double squeezing_db(double lambda) {
  check_lambda(lambda);
  return -10.0 * std::log10((1.0 - lambda) / (1.0 + lambda));
}

}  // namespace psent
