#pragma once

#include <cstdint>
#include <optional>

#include "locc/spectrum.hpp"

namespace locc {

/// Catalyst grid search parameters. Candidates of rank c are descending
/// vectors of c positive multiples of 1/grid_q summing to one.
struct CatalystSearchConfig {
  unsigned dim_lo = 2;
  unsigned dim_hi = 4;
  unsigned grid_q = 20;
  unsigned copies = 1;
  /// Skip the search when the end-point necessary condition fails. Only
  /// disabled to cross-check that pruning never hides a catalyst.
  bool lemma1_pruning = true;
  unsigned threads = 1;

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

struct CatalystSearchOutcome {
  std::optional<SchmidtSpectrum> catalyst;
  bool pruned = false;
  std::uint64_t candidates_checked = 0;
};

/// source (x) catalyst majorized by target (x) catalyst.
bool catalyzes(const SchmidtSpectrum& source, const SchmidtSpectrum& target, const SchmidtSpectrum& catalyst);

/// source^{(x)k} (x) catalyst majorized by target^{(x)k} (x) catalyst.
bool multicopy_elocc_check(const SchmidtSpectrum& source, const SchmidtSpectrum& target,
                           const SchmidtSpectrum& catalyst, unsigned k, const PowerLimits& limits = {});

/// First grid catalyst in enumeration order (ranks ascending, then
/// lexicographically descending value vectors). An empty result means none
/// exists at this grid resolution, not that no catalyst exists.
CatalystSearchOutcome search_catalyst(const SchmidtSpectrum& source, const SchmidtSpectrum& target,
                                      const CatalystSearchConfig& cfg, const PowerLimits& limits = {});

}  // namespace locc
