#include <doctest.h>

#include <cmath>

#include "psent/sweep.hpp"

using namespace psent;

TEST_CASE("grid and parsing") {
  const auto g = uniform_grid(0.05, 0.9, 50);
  CHECK(g.size() == 50);
  CHECK(g.front() == 0.05);
  CHECK(g.back() == 0.9);
  CHECK(uniform_grid(0.3, 0.3, 1) == std::vector<double>{0.3});
  CHECK(parse_measure("logneg") == Measure::LogNeg);
  CHECK(parse_measure("mutualinfo") == Measure::MutualInfo);
  CHECK_FALSE(parse_measure("entropy").has_value());
  CHECK(parse_resource("mixed") == Resource::Mixed);
  CHECK_FALSE(parse_resource("thermal").has_value());
}

TEST_CASE("log-negativity sweep") {
  const auto grid = uniform_grid(0.1, 0.85, 16);
  const auto rows = sweep(Measure::LogNeg, grid, {.transmittance = 0.9});
  REQUIRE(rows.size() == grid.size());
  for (const auto& r : rows) {
    REQUIRE(r.value_mixed.has_value());
    if (r.lambda <= 0.75 + 1e-12) CHECK(*r.value_mixed > *r.value_sq);
  }
}

TEST_CASE("unavailable points") {
  const std::vector<double> grid{0.0, 0.5};
  const auto rows = sweep(Measure::Fidelity, grid, {.transmittance = 0.9});
  CHECK(rows[0].value_sq == 0.5);
  CHECK_FALSE(rows[0].value_pure.has_value());
  CHECK_FALSE(rows[0].value_mixed.has_value());
  CHECK(rows[0].warnings.size() == 2);
  CHECK(rows[1].warnings.empty());
  // mutual information without a signal
  CHECK_THROWS_AS(sweep(Measure::MutualInfo, grid, {}), DomainError);
}

TEST_CASE("mean photon ordering") {
  const auto rows = sweep(Measure::MeanPhoton, uniform_grid(0.05, 0.9, 18), {.transmittance = 0.9});
  for (const auto& r : rows) {
    CHECK(*r.value_pure >= *r.value_sq);
    CHECK(*r.value_mixed >= *r.value_sq);
  }
}

TEST_CASE("sweep output does not depend on thread count") {
  const auto grid = uniform_grid(0.1, 0.8, 8);
  const auto a = sweep(Measure::Neg, grid, {.kmax = 30}, std::nullopt, 1);
  const auto b = sweep(Measure::Neg, grid, {.kmax = 30}, std::nullopt, 4);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(a[i].value_mixed == b[i].value_mixed);
    CHECK(a[i].value_pure == b[i].value_pure);
  }
}

TEST_CASE("find_crossing") {
  const Curve f = [](double x) { return 1.0 - x; };
  const Curve g = [](double x) { return x * x; };
  const auto r = find_crossing(f, g, {0.0, 1.0}, 1e-10);
  CHECK(r.lambda_star == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-9));
  CHECK(r.residual < 1e-9);
  CHECK(r.iterations > 30);
  CHECK_THROWS_AS(find_crossing(f, g, {0.0, 0.3}), NoSignChange);

  const std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  const auto br = scan_for_crossing(f, g, grid);
  REQUIRE(br.has_value());
  CHECK(br->lo == 0.5);
  CHECK(br->hi == 0.75);
  CHECK_FALSE(scan_for_crossing(g, f, grid).has_value());
}

TEST_CASE("crossovers against the squeezed vacuum") {
  const ModelParams base{.transmittance = 0.9, .kmax = 50};
  const double ln_m = measure_crossover(Measure::LogNeg, Resource::Mixed, base, std::nullopt, Bracket{0.6, 0.9}).lambda_star;
  const double ln_p = measure_crossover(Measure::LogNeg, Resource::Pure, base).lambda_star;
  const double t_m = measure_crossover(Measure::Fidelity, Resource::Mixed, base).lambda_star;
  const double t_p = measure_crossover(Measure::Fidelity, Resource::Pure, base).lambda_star;
  CHECK(ln_m == doctest::Approx(0.772).epsilon(0.005 / 0.772));
  CHECK(ln_p == doctest::Approx(0.897).epsilon(0.005 / 0.897));
  CHECK(t_m == doctest::Approx(0.708).epsilon(0.005 / 0.708));
  CHECK(t_p == doctest::Approx(0.815).epsilon(0.005 / 0.815));
  CHECK(t_m < ln_m);
  CHECK(t_p < ln_p);

  const SignalParams sig{0.05};
  CHECK(measure_crossover(Measure::MutualInfo, Resource::Mixed, base, sig).lambda_star <= ln_m);
  CHECK(measure_crossover(Measure::MutualInfo, Resource::Pure, base, sig).lambda_star <= ln_p);
  CHECK_THROWS_AS(measure_crossover(Measure::LogNeg, Resource::Sq, base), DomainError);
}

TEST_CASE("crossing residual on smooth measures") {
  const ModelParams base{.transmittance = 0.9};
  for (Resource r : {Resource::Pure, Resource::Mixed}) {
    const auto res = measure_crossover(Measure::Fidelity, r, base, std::nullopt, std::nullopt, 1e-9);
    CHECK(res.residual < 1e-6);
    const auto mi = measure_crossover(Measure::MutualInfo, r, base, SignalParams{0.7}, std::nullopt, 1e-9);
    CHECK(mi.residual < 1e-6);
  }
}

TEST_CASE("dense-coding limit study") {
  const ModelParams base{.transmittance = 0.9};
  const auto rows = dense_coding_limit_study(default_limit_betas(), base);
  REQUIRE(rows.size() == 7);
  CHECK(rows.back().beta == 0.05);
  REQUIRE(rows.back().lambda_star_pure.has_value());
  REQUIRE(rows.back().lambda_star_mixed.has_value());
  CHECK(std::abs(*rows.back().lambda_star_pure - 0.894) < 0.01);
  CHECK(std::abs(*rows.back().lambda_star_mixed - 0.762) < 0.01);

  // continuity on a finely spaced beta sequence
  std::vector<double> fine;
  for (int i = 30; i >= 1; --i) fine.push_back(0.05 * i);
  const auto seq = dense_coding_limit_study(fine, base);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    REQUIRE(seq[i].lambda_star_pure.has_value());
    REQUIRE(seq[i].lambda_star_mixed.has_value());
    CHECK(std::abs(*seq[i].lambda_star_pure - *seq[i - 1].lambda_star_pure) <= 0.05);
    CHECK(std::abs(*seq[i].lambda_star_mixed - *seq[i - 1].lambda_star_mixed) <= 0.05);
  }

  const std::vector<double> bad{0.5, 0.7};
  CHECK_THROWS_AS(dense_coding_limit_study(bad, base), DomainError);
}
