#include "psent/negativity.hpp"

#include <cmath>
#include <string>

#include "psent/parallel.hpp"

namespace psent {

namespace {

EntanglementReport make_report(double negativity, double delta_trace, int kmax) {
  EntanglementReport report;
  report.negativity = negativity;
  report.raw_negativity = negativity;
  report.log_negativity = std::log2(1.0 + 2.0 * negativity);
  report.delta_trace = delta_trace;
  report.kmax = kmax;
  return report;
}

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw DomainError("lambda must lie in [0, 1)");
}

}  // namespace

BlockDiagonalPT build_pt_blocks(int kmax, const DensityElementFn& element, int jobs) {
  if (kmax < 0) throw DomainError("kmax must be non-negative");
  BlockDiagonalPT pt;
  pt.blocks.resize(static_cast<std::size_t>(kmax) + 1);
  parallel_for(pt.blocks.size(), jobs, [&](std::size_t k) {
    const int kt = static_cast<int>(k);
    PtBlock block{kt, SymmetricMatrix(k + 1)};
    for (int a = 0; a <= kt; ++a) {
      for (int b = a; b <= kt; ++b) {
        const double v = element(DensityElementKey{a, b, kt - b, kt - a});
        block.matrix(a, b) = v;
        block.matrix(b, a) = v;
      }
    }
    pt.blocks[k] = std::move(block);
  });
  for (const auto& block : pt.blocks) pt.delta_trace += block.matrix.trace();
  return pt;
}

BlockDiagonalPT build_pt_blocks(const ModelParams& params, int jobs) {
  params.validate();
  // Surfaces ZeroDetectionProbability before any worker starts.
  (void)mixed_density_element(DensityElementKey{}, params);
  return build_pt_blocks(
      params.kmax, [&params](const DensityElementKey& key) { return mixed_density_element(key, params); }, jobs);
}

BlockDiagonalPT build_pt_blocks(const SchmidtState& state, int jobs) {
  if (state.size() == 0) throw DomainError("empty Schmidt state");
  const int support = 2 * (static_cast<int>(state.size()) - 1);
  return build_pt_blocks(
      support,
      [&state](const DensityElementKey& key) {
        // rho = sum c_m c_n |m m><n n|, so rho_{m1 m2 n1 n2} needs m1 = n1 and m2 = n2.
        if (key.m1 != key.n1 || key.m2 != key.n2) return 0.0;
        return state[static_cast<std::size_t>(key.m1)] * state[static_cast<std::size_t>(key.m2)];
      },
      jobs);
}

EntanglementReport negativity_from_blocks(const BlockDiagonalPT& pt, int jobs) {
  std::vector<double> per_block(pt.blocks.size(), 0.0);
  parallel_for(pt.blocks.size(), jobs, [&](std::size_t k) {
    double neg = 0.0;
    for (double w : symmetric_eigenvalues(pt.blocks[k].matrix))
      if (w < 0.0) neg -= w;
    per_block[k] = neg;
  });
  double raw = 0.0;
  for (double v : per_block) raw += v;

  if (!(pt.delta_trace > 0.0)) throw DomainError("partial transpose has non-positive trace");
  EntanglementReport report = make_report(raw / pt.delta_trace, pt.delta_trace, pt.kmax());
  report.raw_negativity = raw;
  if (pt.delta_trace < kLowTraceThreshold) {
    report.warnings.push_back("truncated trace Delta = " + std::to_string(pt.delta_trace) + " < " +
                              std::to_string(kLowTraceThreshold) + "; increase kmax");
  }
  return report;
}

EntanglementReport schmidt_negativity(const SchmidtState& state) {
  const double s = state.sum();
  EntanglementReport report = make_report(0.5 * (s * s - 1.0), state.norm_squared(), static_cast<int>(state.size()) - 1);
  report.log_negativity = 2.0 * std::log2(s);
  return report;
}

EntanglementReport sv_negativity(double lambda) {
  check_lambda(lambda);
  EntanglementReport report = make_report(lambda / (1.0 - lambda), 1.0, 0);
  report.log_negativity = std::log2(1.0 + lambda) - std::log2(1.0 - lambda);
  return report;
}

EntanglementReport limit_t1_negativity(double lambda) {
  check_lambda(lambda);
  const double l2 = lambda * lambda;
  EntanglementReport report = make_report(lambda * (2.0 + lambda + l2) / ((1.0 + l2) * (1.0 - lambda)), 1.0, 0);
  report.log_negativity = std::log2(std::pow(1.0 + lambda, 3) / ((1.0 + l2) * (1.0 - lambda)));
  return report;
}

EntanglementReport mixed_negativity(const ModelParams& params, int jobs) {
  return negativity_from_blocks(build_pt_blocks(params, jobs), jobs);
}

EntanglementReport negativity(Resource resource, const ModelParams& params, int jobs) {
  params.validate();
  switch (resource) {
    case Resource::Sq: {
      EntanglementReport r = sv_negativity(params.lambda);
      r.kmax = params.kmax;
      return r;
    }
    case Resource::Pure:
      return schmidt_negativity(pure_subtracted_state(params));
    case Resource::Mixed:
      return mixed_negativity(params, jobs);
  }
  throw DomainError("unknown resource");
}

}  // namespace psent
