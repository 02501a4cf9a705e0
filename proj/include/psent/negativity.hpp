#pragma once

#include <functional>
#include <string>
#include <vector>

#include "psent/fock_core.hpp"
#include "psent/jacobi.hpp"

namespace psent {

/// Diagnostic threshold on the truncated trace Delta below which reports
/// carry a warning.
inline constexpr double kLowTraceThreshold = 0.995;

/// One K-block of the partial transpose (w.r.t. mode B). Entry (a, b) couples
/// |a>_A |K-a>_B with |b>_A |K-b>_B.
struct PtBlock {
  int k_total = 0;
  SymmetricMatrix matrix;
};

struct BlockDiagonalPT {
  std::vector<PtBlock> blocks;  // K = 0, 1, ..., blocks.size() - 1
  double delta_trace = 0.0;     // sum of block traces

  int kmax() const { return static_cast<int>(blocks.size()) - 1; }
};

struct EntanglementReport {
  double negativity = 0.0;      // Delta-normalized
  double log_negativity = 0.0;  // log2(1 + 2 negativity), bits
  double delta_trace = 1.0;
  int kmax = 0;
  double raw_negativity = 0.0;  // sum of |negative eigenvalues| before dividing by Delta
  std::vector<std::string> warnings;
};

using DensityElementFn = std::function<double(const DensityElementKey&)>;

/// Generic builder: block K entry (a, b) = rho_{a, b, K-b, K-a}, i.e. the
/// pre-transpose element with n1 and n2 exchanged.
BlockDiagonalPT build_pt_blocks(int kmax, const DensityElementFn& element, int jobs = 1);

/// Blocks of the on/off-heralded mixed state for K = 0..params.kmax.
BlockDiagonalPT build_pt_blocks(const ModelParams& params, int jobs = 1);

/// Blocks of |chi><chi| for a Schmidt state c_0..c_N, covering its whole
/// support K = 0..2N.
BlockDiagonalPT build_pt_blocks(const SchmidtState& state, int jobs = 1);

EntanglementReport negativity_from_blocks(const BlockDiagonalPT& pt, int jobs = 1);

/// Closed form for pure states: ||rho^PT|| = (sum c_n)^2.
EntanglementReport schmidt_negativity(const SchmidtState& state);

/// Two-mode squeezed vacuum, closed form.
EntanglementReport sv_negativity(double lambda);

/// Photon-subtracted state in the T -> 1 limit, closed form.
EntanglementReport limit_t1_negativity(double lambda);

/// Full numeric pipeline for the mixed state: build blocks, diagonalize, sum.
EntanglementReport mixed_negativity(const ModelParams& params, int jobs = 1);

/// Dispatch on the resource: closed forms for sq, Schmidt formula for pure,
/// block diagonalization for mixed.
EntanglementReport negativity(Resource resource, const ModelParams& params, int jobs = 1);

}  // namespace psent
