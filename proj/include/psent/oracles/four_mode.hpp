#pragma once

#include <vector>

#include "psent/fock_core.hpp"

namespace psent::oracles {

// Brute-force reference for the heralded states: the four-mode amplitude
// psi(a, b, c, d) on modes A, B, C, D after both tapping beam splitters,
// truncated at input photon number n <= nmax, then projected with the
// detector POVMs by explicit summation. Beam-splitter amplitudes come from
// expanding (sqrt(T) u - sqrt(R) v)^n term by term, not from the closed form.
class FourModeState {
 public:
  FourModeState(double lambda, double transmittance, int nmax = 40);

  int nmax() const { return nmax_; }

  /// Amplitude of |a>_A |b>_B |c>_C |d>_D.
  double amplitude(int a, int b, int c, int d) const;

  /// Beam-splitter amplitude for n photons, k reflected.
  double splitter(int n, int k) const { return splitter_[n][k]; }

  /// Probability that both on/off detectors (modes C, D) click.
  double prob_on_on() const { return prob_on_on_; }

  /// Probability of exactly one photon in each of C and D.
  double prob_one_one() const;

  /// <m1|<n1| rho |m2>|n2> of the on/on-heralded state of A and B.
  double mixed_element(const DensityElementKey& key) const;

  /// Schmidt coefficients of the (1,1)-heralded state, n = 0..count-1.
  std::vector<double> pure_coeffs(int count) const;

 private:
  double sum_on_on() const;

  double lambda_;
  double transmittance_;
  int nmax_;
  std::vector<double> schmidt_;
  std::vector<std::vector<double>> splitter_;
  double prob_on_on_ = 0.0;
};

}  // namespace psent::oracles
