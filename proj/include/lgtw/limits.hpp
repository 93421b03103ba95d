#pragma once

namespace lgtw {

/// Size limits for the exhaustive solvers, counted in (non-isolated) vertices of
/// the instance each solver actually searches.
struct SolverLimits {
  int tree_congestion = 10;
  int path_dp = 20;
  int treewidth = 20;
  int pathwidth = 20;
  int dense_subgraph = 18;
};

}  // namespace lgtw
