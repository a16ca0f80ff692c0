#pragma once

#include <string_view>

#include "locc/spectrum.hpp"

namespace locc {

/// Deterministic-LOCC relation between two states a and b.
enum class Comparability { SourceToTarget, TargetToSource, Equivalent, Incomparable };

std::string_view to_string(Comparability c);

/// x is majorized by y: every descending prefix sum of x is at most the
/// matching prefix sum of y, the shorter spectrum padded with zeros.
bool majorized_by(const SchmidtSpectrum& x, const SchmidtSpectrum& y);

/// Whether source -> target is possible with probability one under LOCC.
inline bool nielsen_deterministic(const SchmidtSpectrum& source, const SchmidtSpectrum& target) {
  return majorized_by(source, target);
}

/// Optimal probability of an exact (conclusive) conversion:
/// min over l of E_l(source) / E_l(target), where E_l is the tail sum from
/// position l. Zero when the source has lower Schmidt rank than the target.
Rational vidal_pmax(const SchmidtSpectrum& source, const SchmidtSpectrum& target);

Comparability compare(const SchmidtSpectrum& a, const SchmidtSpectrum& b);

}  // namespace locc
