#include "psent/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace psent {

namespace {

constexpr double kSeriesLimit = 3.0;
constexpr double kErfcFractionLimit = 1.0;  // below this 1 - erf loses nothing

// erf(x) = 2/sqrt(pi) exp(-x^2) sum_n (2x^2)^n x / (1*3*...*(2n+1)), x >= 0.
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 500; ++n) {
    term *= 2.0 * x2 / (2.0 * n + 1.0);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return 2.0 / std::sqrt(std::numbers::pi) * std::exp(-x2) * sum;
}

// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
// modified Lentz, x >= kErfcFractionLimit.
double erfc_continued_fraction(double x) {
  if (x > 27.0) return 0.0;  // exp(-x^2) underflows
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < 5000; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x * x) / (std::sqrt(std::numbers::pi) * f);
}

}  // namespace

double erf(double x) {
  if (std::isnan(x)) return x;
  const double ax = std::abs(x);
  const double v = ax < kSeriesLimit ? erf_series(ax) : 1.0 - erfc_continued_fraction(ax);
  return x < 0.0 ? -v : v;
}

double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return 2.0 - erfc(-x);
  if (x < kErfcFractionLimit) return 1.0 - erf_series(x);
  return erfc_continued_fraction(x);
}

}  // namespace psent
