#include "psent/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace psent {

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double SymmetricMatrix::asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

namespace {

double off_diagonal_norm(const SymmetricMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) s += 2.0 * a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Annihilates a(p,q) with one rotation applied from both sides. Only the
// upper triangle is kept consistent; the lower triangle is mirrored.
void rotate(SymmetricMatrix& a, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;

  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    const double new_rp = arp - s * (arq + tau * arp);
    const double new_rq = arq + s * (arp - tau * arq);
    a(r, p) = a(p, r) = new_rp;
    a(r, q) = a(q, r) = new_rq;
  }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& matrix, const JacobiOptions& options) {
  const std::size_t n = matrix.size();
  const double asym = matrix.asymmetry();
  if (!(asym <= options.symmetry_tol)) {
    throw NonSymmetric("matrix asymmetry " + std::to_string(asym) + " exceeds tolerance");
  }

  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (matrix(i, j) + matrix(j, i));

  const double scale = a.frobenius_norm();
  const double target = options.off_rel_tol * scale;

  int sweep = 0;
  for (; off_diagonal_norm(a) > target; ++sweep) {
    if (sweep >= options.max_sweeps) {
      throw NoConvergence("Jacobi iteration did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Entries negligible against both diagonals are dropped outright.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) && std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        rotate(a, p, q);
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace psent
