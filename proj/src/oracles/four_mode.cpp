#include "psent/oracles/four_mode.hpp"

#include <cmath>

namespace psent::oracles {

FourModeState::FourModeState(double lambda, double transmittance, int nmax)
    : lambda_(lambda), transmittance_(transmittance), nmax_(nmax) {
  const double st = std::sqrt(transmittance);
  const double sr = std::sqrt(1.0 - transmittance);

  schmidt_.resize(nmax + 1);
  double power = 1.0;
  for (int n = 0; n <= nmax; ++n) {
    schmidt_[n] = std::sqrt(1.0 - lambda * lambda) * power;
    power *= lambda;
  }

  // poly[n][k]: coefficient of u^(n-k) v^k in (st u - sr v)^n.
  std::vector<std::vector<long double>> poly(nmax + 1);
  poly[0] = {1.0L};
  for (int n = 1; n <= nmax; ++n) {
    poly[n].assign(n + 1, 0.0L);
    for (int k = 0; k <= n; ++k) {
      if (k < n) poly[n][k] += st * poly[n - 1][k];
      if (k > 0) poly[n][k] -= sr * poly[n - 1][k - 1];
    }
  }
  // a^dag^(n-k) c^dag^k |0> / sqrt(n!) = sqrt((n-k)! k! / n!) |n-k, k>.
  std::vector<long double> fact(nmax + 1, 1.0L);
  for (int n = 1; n <= nmax; ++n) fact[n] = fact[n - 1] * n;
  splitter_.resize(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    splitter_[n].resize(n + 1);
    for (int k = 0; k <= n; ++k)
      splitter_[n][k] = static_cast<double>(poly[n][k] * std::sqrt(fact[n - k] * fact[k] / fact[n]));
  }
  prob_on_on_ = sum_on_on();
}

double FourModeState::amplitude(int a, int b, int c, int d) const {
  const int n = a + c;
  if (n != b + d || a < 0 || b < 0 || c < 0 || d < 0 || n > nmax_) return 0.0;
  return schmidt_[n] * splitter_[n][c] * splitter_[n][d];
}

double FourModeState::sum_on_on() const {
  double p = 0.0;
  for (int n = 1; n <= nmax_; ++n)
    for (int c = 1; c <= n; ++c)
      for (int d = 1; d <= n; ++d) {
        const double amp = amplitude(n - c, n - d, c, d);
        p += amp * amp;
      }
  return p;
}

double FourModeState::prob_one_one() const {
  double p = 0.0;
  for (int n = 1; n <= nmax_; ++n) {
    const double amp = amplitude(n - 1, n - 1, 1, 1);
    p += amp * amp;
  }
  return p;
}

double FourModeState::mixed_element(const DensityElementKey& key) const {
  double s = 0.0;
  for (int c = 1; c <= nmax_; ++c)
    for (int d = 1; d <= nmax_; ++d) s += amplitude(key.m1, key.n1, c, d) * amplitude(key.m2, key.n2, c, d);
  return s / prob_on_on_;
}

std::vector<double> FourModeState::pure_coeffs(int count) const {
  const double norm = std::sqrt(prob_one_one());
  std::vector<double> c(count);
  for (int n = 0; n < count; ++n) c[n] = amplitude(n, n, 1, 1) / norm;
  return c;
}

}  // namespace psent::oracles
