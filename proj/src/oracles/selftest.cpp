#include "psent/oracles/selftest.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "psent/densecoding.hpp"
#include "psent/jacobi.hpp"
#include "psent/negativity.hpp"
#include "psent/oracles/eigen_bisection.hpp"
#include "psent/oracles/four_mode.hpp"
#include "psent/oracles/quadrature.hpp"
#include "psent/teleportation.hpp"

namespace psent::oracles {

double relative_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

namespace {

CheckResult check(std::string name, double error, double tol) {
  return {std::move(name), error <= tol, fmt::format("error {:.3e} (tol {:.1e})", error, tol)};
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  std::vector<CheckResult> out;
  const ModelParams params{.lambda = 0.5, .transmittance = 0.9, .kmax = 50};
  const FourModeState brute(params.lambda, params.transmittance, 40);

  double worst = 0.0;
  for (int m1 = 0; m1 <= 4; ++m1)
    for (int m2 = 0; m2 <= 4; ++m2)
      for (int n1 = 0; n1 <= 4; ++n1)
        for (int n2 = 0; n2 <= 4; ++n2) {
          const DensityElementKey key{m1, m2, n1, n2};
          worst = std::max(worst, relative_diff(mixed_density_element(key, params), brute.mixed_element(key)));
        }
  out.push_back(check("mixed density elements vs four-mode POVM", worst, 1e-10));
  out.push_back(check("pdet_mixed vs four-mode POVM", relative_diff(pdet_mixed(params), brute.prob_on_on()), 1e-10));
  out.push_back(check("pdet_pure vs four-mode projection", relative_diff(pdet_pure(params), brute.prob_one_one()), 1e-12));

  std::mt19937_64 rng(20061);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  SymmetricMatrix m(10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i; j < 10; ++j) m(i, j) = m(j, i) = unit(rng);
  const auto jac = symmetric_eigenvalues(m);
  const auto bis = bisection_eigenvalues(m);
  double eig_err = 0.0;
  for (std::size_t i = 0; i < jac.size(); ++i) eig_err = std::max(eig_err, std::abs(jac[i] - bis[i]));
  out.push_back(check("Jacobi eigenvalues vs Sturm bisection", eig_err, 1e-10));

  const auto sv = negativity_from_blocks(build_pt_blocks(squeezed_vacuum_state({.lambda = 0.5, .kmax = 60})));
  out.push_back(check("squeezed-vacuum PT pipeline vs closed form", std::abs(sv.negativity - sv_negativity(0.5).negativity), 1e-6));

  out.push_back(check("fid_pure vs (x,p) quadrature",
                      relative_diff(fid_pure(params).value, fidelity_by_quadrature(Resource::Pure, {0.0, 0.0}, params)), 1e-8));
  out.push_back(check("fid_mixed vs (x,p) quadrature",
                      relative_diff(fid_mixed(params).value, fidelity_by_quadrature(Resource::Mixed, {1.0, 2.0}, params)), 1e-8));

  const SignalParams signal{1.5};
  for (Resource r : {Resource::Sq, Resource::Pure, Resource::Mixed}) {
    const auto closed = channel_matrix(r, params, signal);
    const auto numeric = channel_by_quadrature(r, params, signal);
    double err = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) err = std::max(err, std::abs(closed.probs[a][b] - numeric.probs[a][b]));
    out.push_back(check(fmt::format("{} channel matrix vs homodyne quadrature", to_string(r)), err, 1e-6));
  }
  out.push_back(check("i_sq vs channel-matrix mutual information",
                      std::abs(i_sq(0.5, 1.5) - mutual_information(channel_matrix(Resource::Sq, params, signal))), 1e-10));
  return out;
}

}  // namespace psent::oracles
