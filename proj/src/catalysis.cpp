#include "locc/catalysis.hpp"

#include <algorithm>
#include <future>
#include <vector>

#include "locc/majorization.hpp"
#include "locc/multicopy.hpp"

namespace locc {

void CatalystSearchConfig::validate() const {
  if (dim_lo < 2) throw std::invalid_argument("catalyst rank range must start at 2 or above");
  if (dim_lo > dim_hi) throw std::invalid_argument("catalyst rank range is empty");
  if (grid_q < dim_hi) throw std::invalid_argument("grid denominator must be at least the largest catalyst rank");
  if (copies == 0) throw std::invalid_argument("copies must be at least 1");
}

bool catalyzes(const SchmidtSpectrum& source, const SchmidtSpectrum& target, const SchmidtSpectrum& catalyst) {
  return majorized_by(tensor_product(source, catalyst), tensor_product(target, catalyst));
}

bool multicopy_elocc_check(const SchmidtSpectrum& source, const SchmidtSpectrum& target,
                           const SchmidtSpectrum& catalyst, unsigned k, const PowerLimits& limits) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  return catalyzes(tensor_power(source, k, limits), tensor_power(target, k, limits), catalyst);
}

namespace {

// Partitions of q into exactly `parts` positive parts, each part no larger
// than the previous, in lexicographically descending order.
void partitions(unsigned q, unsigned parts, unsigned max_part, std::vector<unsigned>& prefix,
                std::vector<std::vector<unsigned>>& out) {
  if (parts == 0) {
    if (q == 0) out.push_back(prefix);
    return;
  }
  // Remaining parts-1 entries need at least one unit each.
  const unsigned hi = std::min(max_part, q - (parts - 1));
  // Largest part must be at least ceil(q / parts).
  const unsigned lo = (q + parts - 1) / parts;
  for (unsigned v = hi; v >= lo && v >= 1; --v) {
    prefix.push_back(v);
    partitions(q - v, parts - 1, v, prefix, out);
    prefix.pop_back();
  }
}

SchmidtSpectrum to_catalyst(const std::vector<unsigned>& parts, unsigned q) {
  std::vector<Rational> probs;
  probs.reserve(parts.size());
  for (unsigned p : parts) probs.push_back(make_rational(p, q));
  return make_spectrum(probs);
}

}  // namespace

CatalystSearchOutcome search_catalyst(const SchmidtSpectrum& source, const SchmidtSpectrum& target,
                                      const CatalystSearchConfig& cfg, const PowerLimits& limits) {
  cfg.validate();
  CatalystSearchOutcome outcome;
  // The end points of x^{(x)k} are the k-th powers of those of x, so the
  // check on the base pair decides the k-copy pair as well.
  if (cfg.lemma1_pruning && !lemma1_necessary(source, target)) {
    outcome.pruned = true;
    return outcome;
  }

  const SchmidtSpectrum src = tensor_power(source, cfg.copies, limits);
  const SchmidtSpectrum tgt = tensor_power(target, cfg.copies, limits);
  const unsigned workers = std::max(1u, cfg.threads);

  for (unsigned rank = cfg.dim_lo; rank <= cfg.dim_hi; ++rank) {
    std::vector<std::vector<unsigned>> grid;
    std::vector<unsigned> prefix;
    partitions(cfg.grid_q, rank, cfg.grid_q, prefix, grid);

    // Contiguous chunks, one per worker; the lowest hit index wins.
    const std::size_t chunk = (grid.size() + workers - 1) / std::max<std::size_t>(1, workers);
    std::vector<std::future<std::optional<std::size_t>>> jobs;
    for (std::size_t begin = 0; begin < grid.size(); begin += chunk) {
      const std::size_t end = std::min(grid.size(), begin + chunk);
      jobs.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                [&, begin, end]() -> std::optional<std::size_t> {
                                  for (std::size_t i = begin; i < end; ++i) {
                                    if (catalyzes(src, tgt, to_catalyst(grid[i], cfg.grid_q))) return i;
                                  }
                                  return std::nullopt;
                                }));
    }
    std::optional<std::size_t> hit;
    for (auto& job : jobs) {
      auto found = job.get();
      if (!hit && found) hit = found;
    }
    if (hit) {
      outcome.candidates_checked += *hit + 1;
      outcome.catalyst = to_catalyst(grid[*hit], cfg.grid_q);
      return outcome;
    }
    outcome.candidates_checked += grid.size();
  }
  return outcome;
}

}  // namespace locc
