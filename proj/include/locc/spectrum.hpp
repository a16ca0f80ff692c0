#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "locc/rational.hpp"

namespace locc {

/// One distinct Schmidt probability and how many times it occurs.
struct SpectrumEntry {
  Rational value;
  Integer multiplicity;

  bool operator==(const SpectrumEntry&) const = default;
};

/// Thrown by make_spectrum when the input is not a probability vector.
class SpectrumError : public std::invalid_argument {
 public:
  enum class Kind { Empty, NegativeEntry, SumNotOne };

  SpectrumError(Kind kind, std::string message, Rational deficit = 0)
      : std::invalid_argument(std::move(message)), kind_(kind), deficit_(std::move(deficit)) {}

  Kind kind() const noexcept { return kind_; }
  /// 1 - sum for SumNotOne, zero otherwise.
  const Rational& deficit() const noexcept { return deficit_; }

 private:
  Kind kind_;
  Rational deficit_;
};

/// Thrown when an expansion would exceed its configured size budget.
class CapExceeded : public std::runtime_error {
 public:
  enum class Kind { MemoryCap, OracleCap };

  CapExceeded(Kind kind, Integer estimate, Integer cap);

  Kind kind() const noexcept { return kind_; }
  const Integer& estimate() const noexcept { return estimate_; }
  const Integer& cap() const noexcept { return cap_; }

 private:
  Kind kind_;
  Integer estimate_;
  Integer cap_;
};

/// Size budgets for tensor powers. `max_distinct` bounds the number of
/// distinct products the compressed expansion may materialize;
/// `oracle_max_dim` bounds the dense oracle's dim^k.
struct PowerLimits {
  std::size_t max_distinct = 2'000'000;
  std::size_t oracle_max_dim = 1'000'000;
};

/// Multiplicity-compressed Schmidt spectrum: distinct positive values in
/// strictly descending order, summing (with multiplicity) to exactly one.
/// Immutable once built.
class SchmidtSpectrum {
 public:
  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  /// Schmidt rank: total count including multiplicities.
  const Integer& dim() const noexcept { return dim_; }
  std::size_t distinct() const noexcept { return entries_.size(); }
  const Rational& largest() const { return entries_.front().value; }
  const Rational& smallest() const { return entries_.back().value; }

  /// Each value repeated `multiplicity` times, descending. Throws
  /// CapExceeded when dim exceeds `max_len`.
  std::vector<Rational> expand(std::size_t max_len = 1'000'000) const;

  bool operator==(const SchmidtSpectrum&) const = default;

  /// Sorts, merges equal values and drops zeros. The caller guarantees the
  /// weighted sum is one (used by the tensor kernels, whose outputs are
  /// normalized by construction).
  static SchmidtSpectrum from_weighted(std::vector<SpectrumEntry> weighted);

 private:
  SchmidtSpectrum() = default;

  std::vector<SpectrumEntry> entries_;
  Integer dim_;
};

/// Canonicalizes a probability vector. Entries must be non-negative and sum
/// to exactly one; otherwise throws SpectrumError.
SchmidtSpectrum make_spectrum(std::span<const Rational> probs);

/// Spectrum of the product state: the multiset {a_i * b_j}.
SchmidtSpectrum tensor_product(const SchmidtSpectrum& a, const SchmidtSpectrum& b);

/// Number of distinct-value compositions materialized by tensor_power:
/// binomial(k + m - 1, m - 1) for m distinct values. An upper bound on the
/// distinct products of the result.
Integer estimated_power_distinct(const SchmidtSpectrum& a, unsigned k);

/// Spectrum of a^{(x)k} by multinomial expansion over the distinct values of
/// `a`. Throws CapExceeded (MemoryCap) when estimated_power_distinct exceeds
/// limits.max_distinct, and std::invalid_argument for k == 0.
SchmidtSpectrum tensor_power(const SchmidtSpectrum& a, unsigned k, const PowerLimits& limits = {});

/// Same result as tensor_power, by enumerating all dim^k index tuples of the
/// expanded vector. Test oracle; throws CapExceeded (OracleCap) when dim^k
/// exceeds limits.oracle_max_dim.
SchmidtSpectrum tensor_power_dense(const SchmidtSpectrum& a, unsigned k, const PowerLimits& limits = {});

/// Uniform spectrum of rank d (d >= 1).
SchmidtSpectrum maximally_entangled(unsigned long d);

/// Entropy of entanglement in bits, in double precision.
double entropy(const SchmidtSpectrum& a);

std::string to_string(const SchmidtSpectrum& s);

}  // namespace locc
