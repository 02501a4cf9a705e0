#pragma once

#include <vector>

#include "psent/jacobi.hpp"

namespace psent::oracles {

// Reference eigenvalues: Householder reduction to tridiagonal form, then
// Sturm-sequence bisection for each eigenvalue. Ascending order.
std::vector<double> bisection_eigenvalues(const SymmetricMatrix& matrix, double abs_tol = 1e-14);

}  // namespace psent::oracles
