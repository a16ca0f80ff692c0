#include "locc/multicopy.hpp"

#include <algorithm>
#include <future>

namespace locc {

EndPoints end_points(const SchmidtSpectrum& a, const SchmidtSpectrum& b) {
  EndPoints p;
  p.d = a.dim() > b.dim() ? a.dim() : b.dim();
  p.a_first = a.largest();
  p.b_first = b.largest();
  p.a_last = a.dim() == p.d ? a.smallest() : Rational(0);
  p.b_last = b.dim() == p.d ? b.smallest() : Rational(0);
  return p;
}

bool lemma1_necessary(const SchmidtSpectrum& source, const SchmidtSpectrum& target) {
  const EndPoints p = end_points(source, target);
  return p.a_first <= p.b_first && p.a_last >= p.b_last;
}

StrongBranch strongly_incomparable_sufficient(const SchmidtSpectrum& a, const SchmidtSpectrum& b) {
  const EndPoints p = end_points(a, b);
  if (p.a_first < p.b_first && p.a_last < p.b_last) return StrongBranch::ABelowAtBothEnds;
  if (p.a_first > p.b_first && p.a_last > p.b_last) return StrongBranch::AAboveAtBothEnds;
  return StrongBranch::None;
}

std::optional<unsigned> find_min_deterministic_k(const SchmidtSpectrum& source,
                                                 const SchmidtSpectrum& target, unsigned k_max,
                                                 const PowerLimits& limits) {
  if (k_max == 0) throw std::invalid_argument("k_max must be at least 1");
  if (!lemma1_necessary(source, target)) return std::nullopt;
  for (unsigned n = 1; n <= k_max; ++n) {
    if (majorized_by(tensor_power(source, n, limits), tensor_power(target, n, limits))) return n;
  }
  return std::nullopt;
}

PairClassification classify_pair(const SchmidtSpectrum& a, const SchmidtSpectrum& b, unsigned k_max,
                                 const PowerLimits& limits) {
  if (k_max == 0) throw std::invalid_argument("k_max must be at least 1");
  if (auto relation = compare(a, b); relation != Comparability::Incomparable) {
    return classification::ComparableSingleCopy{relation};
  }
  if (auto branch = strongly_incomparable_sufficient(a, b); branch != StrongBranch::None) {
    return classification::StronglyIncomparable{branch, end_points(a, b).d};
  }
  if (auto n = find_min_deterministic_k(a, b, k_max, limits)) {
    return classification::KCopyIncomparable{*n - 1, Direction::AToB};
  }
  if (auto n = find_min_deterministic_k(b, a, k_max, limits)) {
    return classification::KCopyIncomparable{*n - 1, Direction::BToA};
  }
  return classification::UndecidedUpTo{k_max};
}

Rational pmax_mes(const SchmidtSpectrum& s, unsigned long d) {
  if (s.dim() > Integer(d)) throw std::invalid_argument("pmax_mes needs d >= rank of the state");
  if (s.dim() < Integer(d)) return 0;
  return s.smallest() * d;
}

PmaxScan pmax_scan(const SchmidtSpectrum& source, const SchmidtSpectrum& target, unsigned k_max,
                   const PowerLimits& limits, unsigned threads) {
  if (k_max == 0) throw std::invalid_argument("k_max must be at least 1");
  const EndPoints ends = end_points(source, target);
  const bool decays = ends.a_last < ends.b_last;
  const Rational ratio = decays ? Rational(ends.a_last / ends.b_last) : Rational(0);

  auto row = [&](unsigned k) {
    PmaxRow r{k, vidal_pmax(tensor_power(source, k, limits), tensor_power(target, k, limits)), std::nullopt};
    if (decays) r.bound = pow(ratio, k);
    return r;
  };

  PmaxScan scan;
  scan.rows.reserve(k_max);
  threads = std::max(1u, threads);
  for (unsigned first = 1; first <= k_max; first += threads) {
    const unsigned last = std::min(k_max, first + threads - 1);
    std::vector<std::future<PmaxRow>> batch;
    for (unsigned k = first; k <= last; ++k) {
      batch.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async, row, k));
    }
    for (auto& f : batch) scan.rows.push_back(f.get());
  }
  return scan;
}

std::vector<std::pair<unsigned, bool>> conjecture_scan(const SchmidtSpectrum& source,
                                                       const SchmidtSpectrum& target, unsigned k,
                                                       unsigned n_max, const PowerLimits& limits) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (!majorized_by(tensor_power(source, k + 1, limits), tensor_power(target, k + 1, limits))) {
    throw PreconditionError("source is not deterministically convertible to target at " +
                            std::to_string(k + 1) + " copies");
  }
  std::vector<std::pair<unsigned, bool>> evidence;
  for (unsigned n = k + 2; n <= n_max; ++n) {
    evidence.emplace_back(n, majorized_by(tensor_power(source, n, limits), tensor_power(target, n, limits)));
  }
  return evidence;
}

namespace {

std::string subscript(const Integer& n) {
  static constexpr const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : n.get_str()) out += digits[c - '0'];
  return out;
}

std::string arrow(Direction d) { return d == Direction::AToB ? "A→B" : "B→A"; }

}  // namespace

std::string describe(const PairClassification& c) {
  using namespace classification;
  if (const auto* s = std::get_if<ComparableSingleCopy>(&c)) {
    switch (s->relation) {
      case Comparability::Equivalent: return "Comparable with a single copy (Equivalent)";
      case Comparability::SourceToTarget: return "Comparable with a single copy (A→B)";
      case Comparability::TargetToSource: return "Comparable with a single copy (B→A)";
      case Comparability::Incomparable: break;
    }
    return "Comparable with a single copy";
  }
  if (const auto* s = std::get_if<KCopyIncomparable>(&c)) {
    return std::to_string(s->k) + "-copy LOCC incomparable (" + arrow(s->direction) + " at " +
           std::to_string(s->k + 1) + " copies)";
  }
  if (const auto* s = std::get_if<StronglyIncomparable>(&c)) {
    const std::string op = s->branch == StrongBranch::ABelowAtBothEnds ? "<" : ">";
    return "Strongly incomparable (α₁" + op + "β₁ ∧ α" + subscript(s->d) + op + "β" + subscript(s->d) + ")";
  }
  const auto& u = std::get<UndecidedUpTo>(c);
  return "Undecided up to " + std::to_string(u.k_max) + " copies";
}

}  // namespace locc
