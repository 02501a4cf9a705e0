#include "psent/oracles/eigen_bisection.hpp"

#include <algorithm>
#include <cmath>

namespace psent::oracles {

namespace {

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // off[i] couples i and i+1
};

Tridiagonal householder(const SymmetricMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = 0.5 * (m(i, j) + m(j, i));

  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha += a[i][k] * a[i][k];
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) continue;
    if (a[k + 1][k] > 0.0) alpha = -alpha;
    std::vector<double> v(n, 0.0);
    v[k + 1] = a[k + 1][k] - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = a[i][k];
    double vnorm2 = 0.0;
    for (double x : v) vnorm2 += x * x;
    if (vnorm2 == 0.0) continue;
    // A <- H A H with H = I - 2 v v^T / |v|^2.
    std::vector<double> p(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p[i] += a[i][j] * v[j];
    for (double& x : p) x *= 2.0 / vnorm2;
    double vp = 0.0;
    for (std::size_t i = 0; i < n; ++i) vp += v[i] * p[i];
    const double kfac = vp / vnorm2;
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = p[i] - kfac * v[i];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= v[i] * w[j] + w[i] * v[j];
  }

  Tridiagonal t;
  t.diag.resize(n);
  t.off.resize(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = a[i][i];
  for (std::size_t i = 0; i + 1 < n; ++i) t.off[i] = a[i + 1][i];
  return t;
}

// Number of eigenvalues strictly below x.
int sturm_count(const Tridiagonal& t, double x) {
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    const double b2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
    q = t.diag[i] - x - (i == 0 ? 0.0 : b2 / q);
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> bisection_eigenvalues(const SymmetricMatrix& matrix, double abs_tol) {
  const Tridiagonal t = householder(matrix);
  const std::size_t n = t.diag.size();
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  std::vector<double> eig(n);
  for (std::size_t k = 0; k < n; ++k) {
    double a = lo, b = hi;
    while (b - a > abs_tol && (b - a) > 1e-15 * std::max(std::abs(a), std::abs(b))) {
      const double mid = 0.5 * (a + b);
      if (sturm_count(t, mid) > static_cast<int>(k)) b = mid;
      else a = mid;
    }
    eig[k] = 0.5 * (a + b);
  }
  return eig;
}

}  // namespace psent::oracles
