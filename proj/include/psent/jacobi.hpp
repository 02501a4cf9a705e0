#pragma once

#include <cstddef>
#include <vector>

#include "psent/errors.hpp"

namespace psent {

/// Dense real square matrix, row-major, intended to hold symmetric data.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double trace() const;
  double frobenius_norm() const;
  /// max |a_ij - a_ji|
  double asymmetry() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct JacobiOptions {
  double symmetry_tol = 1e-12;  // absolute
  double off_rel_tol = 1e-13;   // stop when off(A)_F <= off_rel_tol * |A|_F
  int max_sweeps = 100;
};

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// sorted ascending. Throws NonSymmetric or NoConvergence.
std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& matrix, const JacobiOptions& options = {});

}  // namespace psent
