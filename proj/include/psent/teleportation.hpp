#pragma once

#include <complex>

#include "psent/fock_core.hpp"

namespace psent {

/// Average fidelity of teleporting a coherent state.
struct FidelityResult {
  double value = 0.0;
};

/// (1 + lambda) / 2.
FidelityResult fid_sq(double lambda);

/// Resource heralded by the (1,1) photon-number event.
FidelityResult fid_pure(const ModelParams& params);

/// Resource heralded by two on/off clicks: sum_ij (-1)^(i+j) F_ij with
/// gamma_1 = R, gamma_0 = 0.
FidelityResult fid_mixed(const ModelParams& params);

FidelityResult fidelity(Resource resource, const ModelParams& params);

/// Bell-outcome-resolved integrand P(x, p) F(x, p) for a coherent input
/// |alpha0>. Integrating over the (x, p) plane gives fid_pure / fid_mixed.
/// Only the Pure and Mixed resources have a resolved form here.
double fid_xp_integrand(Resource kind, double x, double p, std::complex<double> alpha0, const ModelParams& params);

}  // namespace psent
