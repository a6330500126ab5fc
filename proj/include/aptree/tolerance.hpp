#ifndef APTREE_TOLERANCE_HPP
#define APTREE_TOLERANCE_HPP

#include <cstdint>

namespace aptree {

/// Accuracy targets shared by integration, extremization and root solving.
struct Tolerance {
  double rel = 1e-10;        ///< relative target for integrals
  double abs = 1e-13;        ///< absolute floor for integrals
  double grid = 1e-3;        ///< relative sampling resolution for ess sup/inf fallback
  std::int64_t subdivision_budget = 20000;  ///< adaptive intervals per smooth piece
  std::int64_t unit_block_budget = 4000000; ///< level blocks walked per integral
};

}  // namespace aptree

#endif
