#pragma once

#include "gaa/svg.hpp"
#include "gaa/table.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gaa::cli {

enum ExitCode : int { kSuccess = 0, kRuntimeFailure = 1, kUsageError = 2 };

/// A dataset ready for emission, with the plot `--svg` would draw for it.
struct Dataset {
  std::string name;
  Table table;
  SvgPlot plot;
};

/// Fig. 1 bundle: α = −0.5, φ = π, N = 201; site energies up to μ = 201 and
/// μ = 15, energy curves for the first 15 sites with B ∈ [−2, 2], and the
/// participation ratio at μ = 100.
std::vector<Dataset> fig1_datasets();

/// Fig. 2 bundle: α = 0, φ = 0, N = 51 analogues of the first three Fig. 1
/// panels, then the α scan at Δ/J = 1.8 reusing the α = 0 assignment.
std::vector<Dataset> fig2_datasets();

/// Entry point. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaa::cli
