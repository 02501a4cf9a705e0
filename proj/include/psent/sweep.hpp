#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psent/densecoding.hpp"
#include "psent/fock_core.hpp"

namespace psent {

enum class Measure { LogNeg, Neg, Fidelity, MutualInfo, MeanPhoton };

const char* to_string(Measure m);
std::optional<Measure> parse_measure(const std::string& name);
std::optional<Resource> parse_resource(const std::string& name);

/// Value of `measure` for `resource` at squeezing `lambda`; the remaining
/// parameters come from `base`. MutualInfo requires a signal.
double measure_value(Measure measure, Resource resource, double lambda, const ModelParams& base,
                     const std::optional<SignalParams>& signal = std::nullopt);

struct SweepRecord {
  double lambda = 0.0;
  std::optional<double> value_sq;
  std::optional<double> value_pure;
  std::optional<double> value_mixed;
  Measure measure = Measure::LogNeg;
  std::vector<std::string> warnings;  // one entry per unavailable value
};

/// n points uniformly spaced on [a, b].
std::vector<double> uniform_grid(double a, double b, int n);

/// Evaluates all three resources at every grid point. Points are independent
/// and may run on `jobs` threads; the output order follows the grid.
std::vector<SweepRecord> sweep(Measure measure, std::span<const double> grid, const ModelParams& base,
                               const std::optional<SignalParams>& signal = std::nullopt, int jobs = 1);

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct CrossoverResult {
  double lambda_star = 0.0;
  Bracket bracket;        // bracket the bisection started from
  double residual = 0.0;  // |f - g| at lambda_star
  int iterations = 0;
};

using Curve = std::function<double(double)>;

inline constexpr double kDefaultCrossingTol = 1e-4;

/// Bisection on f - g until the bracket is no wider than tol.
/// Throws NoSignChange when f - g has the same sign at both ends.
CrossoverResult find_crossing(const Curve& f, const Curve& g, Bracket bracket, double tol = kDefaultCrossingTol);

/// First grid interval on which f - g goes from positive to non-positive.
std::optional<Bracket> scan_for_crossing(const Curve& f, const Curve& g, std::span<const double> grid);

/// Crossing of `resource` against the squeezed vacuum for `measure`. Without
/// an explicit bracket, the scan grid 0.05, 0.10, ..., 0.95 locates one.
CrossoverResult measure_crossover(Measure measure, Resource resource, const ModelParams& base,
                                  const std::optional<SignalParams>& signal = std::nullopt,
                                  std::optional<Bracket> bracket = std::nullopt, double tol = kDefaultCrossingTol);

struct DenseLimitRow {
  double beta = 0.0;
  std::optional<double> lambda_star_pure;
  std::optional<double> lambda_star_mixed;
};

/// Dense-coding crossings against the squeezed vacuum for each beta. A beta
/// with no sign change yields an empty entry instead of an error.
std::vector<DenseLimitRow> dense_coding_limit_study(std::span<const double> betas, const ModelParams& base,
                                                    double tol = kDefaultCrossingTol);

/// Default beta sequence of the small-signal study.
std::vector<double> default_limit_betas();

}  // namespace psent
