#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "locc/majorization.hpp"
#include "locc/spectrum.hpp"

namespace locc {

/// Which state turns into which once enough copies are available.
enum class Direction { AToB, BToA };

/// Which strict-inequality branch of the strong-incomparability test fired,
/// comparing the largest (first) and smallest (last, zero-padded) Schmidt
/// probabilities of a and b.
enum class StrongBranch {
  None,
  ABelowAtBothEnds,  ///< a_1 < b_1 and a_d < b_d
  AAboveAtBothEnds,  ///< a_1 > b_1 and a_d > b_d
};

namespace classification {

struct ComparableSingleCopy {
  Comparability relation;
};

/// Incomparable for every n <= k copies; deterministic one way at k + 1.
struct KCopyIncomparable {
  unsigned k;
  Direction direction;
};

struct StronglyIncomparable {
  StrongBranch branch;
  /// Common padded rank d used for the end-point comparison.
  Integer d;
};

struct UndecidedUpTo {
  unsigned k_max;
};

}  // namespace classification

using PairClassification =
    std::variant<classification::ComparableSingleCopy, classification::KCopyIncomparable,
                 classification::StronglyIncomparable, classification::UndecidedUpTo>;

struct PmaxRow {
  unsigned k;
  Rational pmax;
  /// (a_d / b_d)^k, present only when a_d < b_d.
  std::optional<Rational> bound;
};

struct PmaxScan {
  std::vector<PmaxRow> rows;
};

/// The two end points of a pair, with d = max rank and implicit zero tails.
struct EndPoints {
  Rational a_first, a_last, b_first, b_last;
  Integer d;
};
EndPoints end_points(const SchmidtSpectrum& a, const SchmidtSpectrum& b);

/// Necessary condition for source^{(x)k} -> target^{(x)k} under LOCC or
/// ELOCC for any k: a_1 <= b_1 and a_d >= b_d.
bool lemma1_necessary(const SchmidtSpectrum& source, const SchmidtSpectrum& target);

/// Sufficient condition for strong incomparability.
StrongBranch strongly_incomparable_sufficient(const SchmidtSpectrum& a, const SchmidtSpectrum& b);

/// Smallest n <= k_max with source^{(x)n} majorized by target^{(x)n}.
std::optional<unsigned> find_min_deterministic_k(const SchmidtSpectrum& source,
                                                 const SchmidtSpectrum& target, unsigned k_max,
                                                 const PowerLimits& limits = {});

/// Tries a -> b first, then b -> a.
PairClassification classify_pair(const SchmidtSpectrum& a, const SchmidtSpectrum& b, unsigned k_max,
                                 const PowerLimits& limits = {});

/// Optimal conclusive probability of reaching the rank-d maximally entangled
/// state: d times the d-th largest value (zero when rank(s) < d).
Rational pmax_mes(const SchmidtSpectrum& s, unsigned long d);

/// Rows k = 1..k_max of vidal_pmax(source^{(x)k}, target^{(x)k}). Rows are
/// computed on up to `threads` workers; the result does not depend on it.
PmaxScan pmax_scan(const SchmidtSpectrum& source, const SchmidtSpectrum& target, unsigned k_max,
                   const PowerLimits& limits = {}, unsigned threads = 1);

/// Thrown by conjecture_scan when the pair is not deterministic at k + 1.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical evidence only: for n = k + 2..n_max, whether source^{(x)n} is
/// majorized by target^{(x)n}, given that it holds at n = k + 1.
std::vector<std::pair<unsigned, bool>> conjecture_scan(const SchmidtSpectrum& source,
                                                       const SchmidtSpectrum& target, unsigned k,
                                                       unsigned n_max, const PowerLimits& limits = {});

std::string describe(const PairClassification& c);

}  // namespace locc
