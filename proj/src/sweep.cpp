#include "psent/sweep.hpp"

#include <cmath>

#include "psent/negativity.hpp"
#include "psent/parallel.hpp"
#include "psent/teleportation.hpp"

namespace psent {

const char* to_string(Measure m) {
  switch (m) {
    case Measure::LogNeg: return "logneg";
    case Measure::Neg: return "neg";
    case Measure::Fidelity: return "fidelity";
    case Measure::MutualInfo: return "mutualinfo";
    case Measure::MeanPhoton: return "meanphoton";
  }
  return "?";
}

std::optional<Measure> parse_measure(const std::string& name) {
  for (Measure m : {Measure::LogNeg, Measure::Neg, Measure::Fidelity, Measure::MutualInfo, Measure::MeanPhoton})
    if (name == to_string(m)) return m;
  return std::nullopt;
}

std::optional<Resource> parse_resource(const std::string& name) {
  for (Resource r : {Resource::Sq, Resource::Pure, Resource::Mixed})
    if (name == to_string(r)) return r;
  return std::nullopt;
}

double measure_value(Measure measure, Resource resource, double lambda, const ModelParams& base,
                     const std::optional<SignalParams>& signal) {
  ModelParams params = base;
  params.lambda = lambda;
  params.validate();
  switch (measure) {
    case Measure::LogNeg: return negativity(resource, params).log_negativity;
    case Measure::Neg: return negativity(resource, params).negativity;
    case Measure::Fidelity: return fidelity(resource, params).value;
    case Measure::MutualInfo:
      if (!signal) throw DomainError("the mutualinfo measure needs a signal amplitude beta");
      return dense_coding_information(resource, params, *signal);
    case Measure::MeanPhoton:
      switch (resource) {
        case Resource::Sq: return mean_photon_sq(lambda);
        case Resource::Pure: return mean_photon(pure_subtracted_state(params));
        case Resource::Mixed: return mean_photon_mixed(params);
      }
  }
  throw DomainError("unknown measure");
}

std::vector<double> uniform_grid(double a, double b, int n) {
  if (n < 1) throw DomainError("grid needs at least one point");
  if (n == 1) return {a};
  if (!(b > a)) throw DomainError("grid end must exceed grid start");
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) grid[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return grid;
}

std::vector<SweepRecord> sweep(Measure measure, std::span<const double> grid, const ModelParams& base,
                               const std::optional<SignalParams>& signal, int jobs) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw DomainError("sweep grid must be strictly increasing");
  if (measure == Measure::MutualInfo && !signal) throw DomainError("the mutualinfo measure needs a signal amplitude beta");

  std::vector<SweepRecord> records(grid.size());
  parallel_for(grid.size(), jobs, [&](std::size_t i) {
    SweepRecord& rec = records[i];
    rec.lambda = grid[i];
    rec.measure = measure;
    auto eval = [&](Resource r, std::optional<double>& slot) {
      try {
        slot = measure_value(measure, r, grid[i], base, signal);
      } catch (const Error& e) {
        rec.warnings.push_back(std::string(to_string(r)) + " unavailable at lambda=" + std::to_string(grid[i]) + ": " +
                               e.name() + ": " + e.what());
      }
    };
    eval(Resource::Sq, rec.value_sq);
    eval(Resource::Pure, rec.value_pure);
    eval(Resource::Mixed, rec.value_mixed);
  });
  return records;
}

CrossoverResult find_crossing(const Curve& f, const Curve& g, Bracket bracket, double tol) {
  if (!(tol > 0.0)) throw DomainError("crossing tolerance must be positive");
  if (!(bracket.hi > bracket.lo)) throw DomainError("bracket must satisfy lo < hi");
  double lo = bracket.lo;
  double hi = bracket.hi;
  const double d_lo = f(lo) - g(lo);
  const double d_hi = f(hi) - g(hi);
  if (d_lo == 0.0 || d_hi == 0.0) {
    const double root = d_lo == 0.0 ? lo : hi;
    return {root, bracket, 0.0, 0};
  }
  if ((d_lo > 0.0) == (d_hi > 0.0)) {
    throw NoSignChange("f - g has the same sign at " + std::to_string(lo) + " and " + std::to_string(hi));
  }
  const bool lo_positive = d_lo > 0.0;
  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double d = f(mid) - g(mid);
    ++iterations;
    if (d == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((d > 0.0) == lo_positive) lo = mid;
    else hi = mid;
  }
  const double root = 0.5 * (lo + hi);
  return {root, bracket, std::abs(f(root) - g(root)), iterations};
}

std::optional<Bracket> scan_for_crossing(const Curve& f, const Curve& g, std::span<const double> grid) {
  if (grid.size() < 2) return std::nullopt;
  double prev = f(grid[0]) - g(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double d = f(grid[i]) - g(grid[i]);
    if (prev > 0.0 && d <= 0.0) return Bracket{grid[i - 1], grid[i]};
    prev = d;
  }
  return std::nullopt;
}

namespace {

std::vector<double> default_scan_grid() { return uniform_grid(0.05, 0.95, 19); }

}  // namespace

CrossoverResult measure_crossover(Measure measure, Resource resource, const ModelParams& base,
                                  const std::optional<SignalParams>& signal, std::optional<Bracket> bracket, double tol) {
  if (resource == Resource::Sq) throw DomainError("crossover is taken against the squeezed vacuum; pick pure or mixed");
  const Curve f = [&](double l) { return measure_value(measure, resource, l, base, signal); };
  const Curve g = [&](double l) { return measure_value(measure, Resource::Sq, l, base, signal); };
  if (!bracket) {
    const auto grid = default_scan_grid();
    bracket = scan_for_crossing(f, g, grid);
    if (!bracket) throw NoSignChange(std::string("no crossing of ") + to_string(resource) + " and sq found for " + to_string(measure));
  }
  return find_crossing(f, g, *bracket, tol);
}

std::vector<DenseLimitRow> dense_coding_limit_study(std::span<const double> betas, const ModelParams& base, double tol) {
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > 0.0)) throw DomainError("betas must be positive");
    if (i > 0 && !(betas[i] < betas[i - 1])) throw DomainError("betas must be strictly decreasing");
  }
  const auto grid = default_scan_grid();
  std::vector<DenseLimitRow> rows;
  rows.reserve(betas.size());
  for (double beta : betas) {
    DenseLimitRow row{beta, std::nullopt, std::nullopt};
    const std::optional<SignalParams> signal = SignalParams{beta};
    for (Resource r : {Resource::Pure, Resource::Mixed}) {
      try {
        const auto res = measure_crossover(Measure::MutualInfo, r, base, signal, std::nullopt, tol);
        (r == Resource::Pure ? row.lambda_star_pure : row.lambda_star_mixed) = res.lambda_star;
      } catch (const NoSignChange&) {
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> default_limit_betas() { return {1.5, 1.0, 0.7, 0.4, 0.2, 0.1, 0.05}; }

}  // namespace psent
