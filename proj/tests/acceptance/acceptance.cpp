// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "psent/densecoding.hpp"
#include "psent/negativity.hpp"
#include "psent/oracles/four_mode.hpp"
#include "psent/oracles/quadrature.hpp"
#include "psent/oracles/selftest.hpp"
#include "psent/sweep.hpp"
#include "psent/teleportation.hpp"

using namespace psent;
using psent::oracles::relative_diff;

namespace {

// tolerances
constexpr double kSvTol = 1e-6;
constexpr double kSvSeconds = 10.0;
constexpr double kPureTol = 1e-8;
constexpr double kElementTol = 1e-10;
constexpr double kCrossBand = 0.005;
constexpr double kCrossSeconds = 120.0;
constexpr double kMeanPhotonRel = 0.01;
constexpr double kQuadTol = 1e-8;
constexpr double kChannelTol = 1e-6;
constexpr double kRowTol = 1e-9;
constexpr double kDenseBand = 0.01;
constexpr double kLimitTol = 1e-3;
constexpr double kEvalSeconds = 5.0;

struct Line {
  bool ok;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Line criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_n = 0.0, worst_e = 0.0, at = 0.0;
  for (int i = 1; i <= 8; ++i) {
    const double l = 0.1 * i;
    const auto r = negativity_from_blocks(build_pt_blocks(squeezed_vacuum_state({.lambda = l, .kmax = 60})));
    const double dn = std::abs(r.negativity - l / (1 - l));
    const double de = std::abs(r.log_negativity - std::log2((1 + l) / (1 - l)));
    if (std::max(dn, de) > std::max(worst_n, worst_e)) at = l;
    worst_n = std::max(worst_n, dn);
    worst_e = std::max(worst_e, de);
  }
  const double s = seconds_since(t0);
  return {worst_n <= kSvTol && worst_e <= kSvTol && s < kSvSeconds,
          fmt::format("squeezed-vacuum PT oracle, kmax 60: max |dN| {:.2e}, max |dE| {:.2e} (worst at lambda {:.1f}, tol "
                      "{:.0e}), {:.2f} s",
                      worst_n, worst_e, at, kSvTol, s)};
}

Line criterion2() {
  double worst = 0.0;
  for (int i = 1; i <= 16; ++i) {
    const auto st = pure_subtracted_state({.lambda = 0.05 * i, .transmittance = 0.9, .kmax = 50});
    const auto a = schmidt_negativity(st);
    const auto b = negativity_from_blocks(build_pt_blocks(st));
    worst = std::max({worst, std::abs(a.negativity - b.negativity), std::abs(a.log_negativity - b.log_negativity)});
  }
  return {worst <= kPureTol, fmt::format("pure state Schmidt formula vs PT blocks, lambda <= 0.8: max diff {:.2e} (tol "
                                         "{:.0e})",
                                         worst, kPureTol)};
}

Line criterion3() {
  double worst = 0.0;
  int count = 0;
  for (double l : {0.2, 0.5, 0.7})
    for (double t : {0.8, 0.9}) {
      const ModelParams p{.lambda = l, .transmittance = t};
      const oracles::FourModeState brute(l, t, 60);
      for (int m1 = 0; m1 <= 8; ++m1)
        for (int m2 = 0; m2 <= 8; ++m2)
          for (int n1 = 0; n1 <= 8; ++n1)
            for (int n2 = 0; n2 <= 8; ++n2) {
              const DensityElementKey k{m1, m2, n1, n2};
              const double a = mixed_density_element(k, p);
              const double b = brute.mixed_element(k);
              worst = std::max(worst, relative_diff(a, b));
              ++count;
            }
    }
  return {worst <= kElementTol, fmt::format("{} mixed-state elements vs four-mode POVM: max rel diff {:.2e} (tol {:.0e})",
                                            count, worst, kElementTol)};
}

struct Timed {
  double value;
  double seconds;
};

Timed timed_crossing(Measure m, Resource r, const std::optional<SignalParams>& sig = std::nullopt) {
  const auto t0 = std::chrono::steady_clock::now();
  const double v = measure_crossover(m, r, {.transmittance = 0.9, .kmax = 50}, sig).lambda_star;
  return {v, seconds_since(t0)};
}

Line criterion4() {
  const auto p = timed_crossing(Measure::LogNeg, Resource::Pure);
  const auto m = timed_crossing(Measure::LogNeg, Resource::Mixed);
  const bool ok = std::abs(p.value - 0.897) <= kCrossBand && std::abs(m.value - 0.772) <= kCrossBand &&
                  p.seconds < kCrossSeconds && m.seconds < kCrossSeconds;
  return {ok, fmt::format("log-negativity crossovers: pure {:.4f} (0.897), mixed {:.4f} (0.772), band {}; {:.2f} s and "
                          "{:.2f} s",
                          p.value, m.value, kCrossBand, p.seconds, m.seconds)};
}

Line criterion5() {
  const double d78 = build_pt_blocks({.lambda = 0.78, .transmittance = 0.9, .kmax = 50}).delta_trace;
  const double d88 = build_pt_blocks({.lambda = 0.88, .transmittance = 0.9, .kmax = 50}).delta_trace;
  const double n78 = mean_photon_mixed({.lambda = 0.78, .transmittance = 0.9});
  const double n88 = mean_photon_mixed({.lambda = 0.88, .transmittance = 0.9});
  const bool ok = d78 >= 0.9995 && std::abs(d88 - 0.995) <= 0.002 && std::abs(n78 / 7.71 - 1) <= kMeanPhotonRel &&
                  std::abs(n88 / 14.7 - 1) <= kMeanPhotonRel;
  return {ok, fmt::format("truncation: Delta(0.78) {:.6f}, Delta(0.88) {:.6f}, mean photons {:.4f} and {:.4f}", d78, d88,
                          n78, n88)};
}

Line criterion6() {
  const auto p = timed_crossing(Measure::Fidelity, Resource::Pure);
  const auto m = timed_crossing(Measure::Fidelity, Resource::Mixed);
  bool sq_exact = true;
  for (int i = 0; i < 100; ++i) {
    const double l = 0.01 * i;
    sq_exact = sq_exact && fid_sq(l).value == (1 + l) / 2;
  }
  double quad = 0.0;
  for (double l : {0.3, 0.5, 0.8})
    for (std::complex<double> a0 : {std::complex<double>{0, 0}, {1, 2}}) {
      const ModelParams q{.lambda = l, .transmittance = 0.9};
      quad = std::max(quad, relative_diff(fid_pure(q).value, oracles::fidelity_by_quadrature(Resource::Pure, a0, q)));
      quad = std::max(quad, relative_diff(fid_mixed(q).value, oracles::fidelity_by_quadrature(Resource::Mixed, a0, q)));
    }
  const bool ok = std::abs(p.value - 0.815) <= kCrossBand && std::abs(m.value - 0.708) <= kCrossBand && sq_exact &&
                  quad <= kQuadTol;
  return {ok, fmt::format("teleportation crossovers: pure {:.4f} (0.815), mixed {:.4f} (0.708); sq closed form {}; "
                          "quadrature max rel diff {:.2e} (tol {:.0e})",
                          p.value, m.value, sq_exact ? "exact" : "off", quad, kQuadTol)};
}

Line criterion7() {
  const ModelParams p{.lambda = 0.5, .transmittance = 0.9};
  const SignalParams s{1.5};
  double entry = 0.0, row = 0.0;
  for (Resource r : {Resource::Sq, Resource::Pure, Resource::Mixed}) {
    const auto closed = channel_matrix(r, p, s);
    const auto numeric = oracles::channel_by_quadrature(r, p, s);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) entry = std::max(entry, std::abs(closed.probs[a][b] - numeric.probs[a][b]));
    row = std::max(row, closed.max_row_deviation());
  }
  return {entry <= kChannelTol && row <= kRowTol,
          fmt::format("channel matrices vs homodyne quadrature: max entry diff {:.2e} (tol {:.0e}), max row deviation "
                      "{:.2e} (tol {:.0e})",
                      entry, kChannelTol, row, kRowTol)};
}

Line criterion8() {
  const std::vector<double> betas = default_limit_betas();
  const auto rows = dense_coding_limit_study(betas, {.transmittance = 0.9});
  const auto& last = rows.back();
  const bool have = last.lambda_star_pure && last.lambda_star_mixed;
  const double lp = have ? *last.lambda_star_pure : NAN;
  const double lm = have ? *last.lambda_star_mixed : NAN;
  const bool ok = have && last.beta == 0.05 && std::abs(lp - 0.894) <= kDenseBand && std::abs(lm - 0.762) <= kDenseBand;
  return {ok, fmt::format("dense-coding crossings at beta 0.05: pure {:.4f} (0.894), mixed {:.4f} (0.762), band {}", lp,
                          lm, kDenseBand)};
}

Line criterion9() {
  const ModelParams near{.lambda = 0.5, .transmittance = 0.9999};
  const auto lim = limit_t1_negativity(0.5);
  const double d_pure = std::abs(schmidt_negativity(pure_subtracted_state(near)).log_negativity - lim.log_negativity);
  const double d_mixed = std::abs(mixed_negativity(near).log_negativity - lim.log_negativity);
  const double d_fid = std::abs(fid_mixed(near).value - fid_pure(near).value);
  const double d_info = std::abs(i_mixed(near, {1.0}) - i_pure(near, {1.0}));
  bool ordering = limit_t1_negativity(0.0).log_negativity == sv_negativity(0.0).log_negativity;
  for (int i = 1; i < 50; ++i) {
    const double l = 0.98 * i / 49.0;
    ordering = ordering && limit_t1_negativity(l).log_negativity > sv_negativity(l).log_negativity;
  }
  const bool ok = d_pure <= kLimitTol && d_mixed <= kLimitTol && d_fid <= kLimitTol && d_info <= kLimitTol && ordering;
  return {ok, fmt::format("T = 0.9999 limit: log-neg pure {:.1e}, mixed {:.1e}; fidelity {:.1e}; information {:.1e} (tol "
                          "{:.0e}); sv <= limit ordering {}",
                          d_pure, d_mixed, d_fid, d_info, kLimitTol, ordering ? "holds" : "broken")};
}

Line criterion10() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = mixed_negativity({.lambda = 0.772, .transmittance = 0.9, .kmax = 50}, 1);
  const double s = seconds_since(t0);
  return {s < kEvalSeconds, fmt::format("mixed log-negativity at kmax 50, one thread: {:.3f} s (limit {} s), E = {:.6f}",
                                        s, kEvalSeconds, r.log_negativity)};
}

}  // namespace

int main() {
  const std::vector<std::function<Line()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line line;
    try {
      line = criteria[i]();
    } catch (const std::exception& e) {
      line = {false, std::string("threw: ") + e.what()};
    }
    if (!line.ok) ++failed;
    fmt::print("[{}] criterion {}: {}\n", line.ok ? "PASS" : "FAIL", i + 1, line.detail);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
