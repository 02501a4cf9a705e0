#pragma once

#include <array>

#include "psent/fock_core.hpp"
#include "psent/special_functions.hpp"

namespace psent {

/// QPSK alphabet a_kl = (x_s, p_s) = ((-1)^k sqrt2 beta, (-1)^l sqrt2 beta),
/// index 2k + l, each sent with probability 1/4.
struct SignalParams {
  double beta = 1.0;

  void validate() const;
  double x_shift(int symbol) const;
  double p_shift(int symbol) const;
};

/// probs[a][b] = P(b | a). Decision b_mn: m = 0 <=> x >= 0, n = 0 <=> p >= 0.
struct ChannelMatrix4 {
  std::array<std::array<double, 4>, 4> probs{};

  /// max_a |sum_b P(b|a) - 1|
  double max_row_deviation() const;
};

/// Quadrant probabilities of a QPSK channel indexed by how many of the two
/// sign decisions agree with the sent symbol.
struct QuadrantProbabilities {
  double both = 0.0;  // correct symbol
  double one = 0.0;   // one axis flipped
  double none = 0.0;  // both axes flipped
};

/// Value and first two derivatives in mu of (1/mu) h(erf(sqrt(width2 mu) beta)),
/// h = (1+e)^2, (1-e^2) or (1-e)^2 for matching_axes = 2, 1, 0.
struct KernelDerivatives {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
};

KernelDerivatives pure_kernel_derivatives(int matching_axes, double width2, double beta, double mu = 1.0);

QuadrantProbabilities quadrant_probabilities(Resource kind, const ModelParams& params, const SignalParams& signal);

ChannelMatrix4 channel_matrix(Resource kind, const ModelParams& params, const SignalParams& signal);

/// Mutual information with uniform prior, in bits.
double mutual_information(const ChannelMatrix4& channel);

/// Squeezed-vacuum resource, closed form.
double i_sq(double lambda, double beta);

/// (1,1)-heralded resource, closed form with the mu-derivative operator.
double i_pure(const ModelParams& params, const SignalParams& signal);

/// On/off-heralded resource, closed form.
double i_mixed(const ModelParams& params, const SignalParams& signal);

double dense_coding_information(Resource kind, const ModelParams& params, const SignalParams& signal);

/// Bell-measurement outcome density P(x, p | x_s, p_s) given the resource.
double homodyne_density(Resource kind, double x, double p, double x_s, double p_s, const ModelParams& params);

}  // namespace psent
