#pragma once

#include <span>
#include <vector>

#include "psent/errors.hpp"

namespace psent {

/// Entangled resource being evaluated: the two-mode squeezed vacuum, the
/// (1,1) photon-number-resolved subtraction, or the on/off subtraction.
enum class Resource { Sq, Pure, Mixed };

const char* to_string(Resource r);

/// Physical and numerical parameters shared by every computation.
///
/// lambda is tanh(r) of the two-mode squeezer, transmittance is the T of the
/// two tapping beam splitters. The reflectance R = 1 - T is always derived.
/// kmax is the Fock cutoff: the largest total photon number K kept in the
/// partial-transpose blocks, and the largest n kept in Schmidt vectors.
struct ModelParams {
  double lambda = 0.5;
  double transmittance = 0.9;
  int kmax = 50;
  double tail_rel_tol = 1e-16;

  double reflectance() const { return 1.0 - transmittance; }

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

/// Non-negative Schmidt coefficients c_n of sum_n c_n |n>_A |n>_B.
class SchmidtState {
 public:
  explicit SchmidtState(std::vector<double> coeffs);

  std::span<const double> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : 0.0; }

  double sum() const;
  double norm_squared() const;

 private:
  std::vector<double> coeffs_;
};

/// Index of rho_{m1 m2 n1 n2} = <m1|_A <n1|_B rho |m2>_A |n2>_B.
struct DensityElementKey {
  int m1 = 0;
  int m2 = 0;
  int n1 = 0;
  int n2 = 0;
};

/// log(n!) from a precomputed table (n < 2048), log-gamma beyond.
double log_factorial(int n);

/// sqrt(1 - lambda^2) lambda^n.
double schmidt_coeff(double lambda, int n);

/// Amplitude for k of n photons to be reflected at a beam splitter of
/// transmittance T: (-1)^k sqrt(C(n,k)) T^((n-k)/2) R^(k/2).
double bs_coeff(int n, int k, double transmittance);

/// Two-mode squeezed vacuum truncated to n = 0..kmax.
SchmidtState squeezed_vacuum_state(const ModelParams& params);

/// State heralded by exactly one photon in each tapped arm, n = 0..kmax.
SchmidtState pure_subtracted_state(const ModelParams& params);

/// Probability of the (1,1) photon-number detection event.
double pdet_pure(const ModelParams& params);

/// Probability that both on/off detectors click.
double pdet_mixed(const ModelParams& params);

/// Fock element of the on/off-heralded mixed state. The selection rule
/// m1 - n1 = m2 - n2 fixes j = i + (m1 - n1), leaving a single positive
/// series in i that is cut once a term drops below tail_rel_tol times the
/// running sum (hard cap i <= 500).
double mixed_density_element(const DensityElementKey& key, const ModelParams& params);

/// <N_A + N_B> of the on/off-heralded state, closed form.
double mean_photon_mixed(const ModelParams& params);

/// <N_A + N_B> of the two-mode squeezed vacuum, 2 lambda^2 / (1 - lambda^2).
double mean_photon_sq(double lambda);

/// <N_A + N_B> of a (renormalized) Schmidt state.
double mean_photon(const SchmidtState& state);

/// Squeezing in dB of a single-mode squeezer with tanh(r) = lambda.
double squeezing_db(double lambda);

}  // namespace psent
