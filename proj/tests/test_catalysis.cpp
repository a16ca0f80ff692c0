#include <gtest/gtest.h>

#include <random>

#include "locc/catalysis.hpp"
#include "locc/majorization.hpp"
#include "locc/multicopy.hpp"
#include "oracle.hpp"

using namespace locc;
using locc::testing::random_spectrum;
using locc::testing::spectrum;

namespace {

const SchmidtSpectrum kFour = spectrum({"0.4", "0.36", "0.14", "0.1"});
const SchmidtSpectrum kThree = spectrum({"0.5", "0.25", "0.25"});
const SchmidtSpectrum kChi = spectrum({"0.6", "0.4"});
const SchmidtSpectrum kZeta = spectrum({"0.4", "0.4", "0.2"});
const SchmidtSpectrum kOmega = spectrum({"0.5", "0.25", "0.25"});

}  // namespace

TEST(Catalyzes, Examples) {
  EXPECT_TRUE(catalyzes(kFour, kThree, kChi));
  EXPECT_FALSE(catalyzes(kFour, kThree, spectrum({"0.5", "0.5"})));
  EXPECT_TRUE(catalyzes(kFour, kFour, kChi));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) EXPECT_FALSE(catalyzes(kZeta, kOmega, random_spectrum(rng, 1, 6)));
}

TEST(Catalyzes, MulticopyCheck) {
  EXPECT_TRUE(multicopy_elocc_check(kFour, kThree, kChi, 1));
  EXPECT_TRUE(multicopy_elocc_check(kFour, kThree, kChi, 2));
  EXPECT_TRUE(multicopy_elocc_check(kThree, kThree, kChi, 3));
  for (unsigned k = 1; k <= 3; ++k) EXPECT_FALSE(multicopy_elocc_check(kZeta, kOmega, kChi, k));
  EXPECT_THROW(multicopy_elocc_check(kFour, kThree, kChi, 0), std::invalid_argument);
}

TEST(SearchCatalyst, FindsQubitCatalyst) {
  const auto outcome = search_catalyst(kFour, kThree, {.dim_lo = 2, .dim_hi = 2, .grid_q = 10});
  ASSERT_TRUE(outcome.catalyst.has_value());
  // Grid order: (9,1), (8,2), (7,3), (6,4); only the last catalyzes.
  EXPECT_EQ(*outcome.catalyst, kChi);
  EXPECT_EQ(outcome.candidates_checked, 4u);
  EXPECT_TRUE(catalyzes(kFour, kThree, *outcome.catalyst));
  EXPECT_FALSE(outcome.pruned);
}

TEST(SearchCatalyst, DefaultGridContainsKnownCatalyst) {
  const auto outcome = search_catalyst(kFour, kThree, {});
  ASSERT_TRUE(outcome.catalyst.has_value());
  EXPECT_TRUE(catalyzes(kFour, kThree, *outcome.catalyst));
}

TEST(SearchCatalyst, ShortCircuitsOnEndPointCondition) {
  const auto outcome = search_catalyst(kZeta, kOmega, {});
  EXPECT_FALSE(outcome.catalyst.has_value());
  EXPECT_TRUE(outcome.pruned);
  EXPECT_EQ(outcome.candidates_checked, 0u);
}

TEST(SearchCatalyst, IdenticalPairTakesFirstGridPoint) {
  const auto outcome = search_catalyst(kThree, kThree, {});
  ASSERT_TRUE(outcome.catalyst.has_value());
  EXPECT_EQ(*outcome.catalyst, spectrum({"0.95", "0.05"}));
}

TEST(SearchCatalyst, NoneAtCoarseResolution) {
  const auto outcome = search_catalyst(kFour, kThree, {.dim_lo = 2, .dim_hi = 2, .grid_q = 4});
  EXPECT_FALSE(outcome.catalyst.has_value());
  EXPECT_FALSE(outcome.pruned);
  EXPECT_EQ(outcome.candidates_checked, 2u);  // (3,1), (2,2)
}

TEST(SearchCatalyst, ConfigValidation) {
  EXPECT_THROW(search_catalyst(kFour, kThree, {.dim_lo = 1}), std::invalid_argument);
  EXPECT_THROW(search_catalyst(kFour, kThree, {.dim_lo = 3, .dim_hi = 2}), std::invalid_argument);
  EXPECT_THROW(search_catalyst(kFour, kThree, {.dim_hi = 4, .grid_q = 3}), std::invalid_argument);
  EXPECT_THROW(search_catalyst(kFour, kThree, {.copies = 0}), std::invalid_argument);
}

TEST(SearchCatalyst, PruningNeverHidesACatalyst) {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 40; ++i) {
    const auto a = random_spectrum(rng, 2, 4);
    const auto b = random_spectrum(rng, 2, 4);
    if (lemma1_necessary(a, b)) continue;
    ++checked;
    const auto exhaustive =
        search_catalyst(a, b, {.dim_lo = 2, .dim_hi = 3, .grid_q = 6, .lemma1_pruning = false});
    EXPECT_FALSE(exhaustive.catalyst.has_value()) << to_string(a) << " " << to_string(b);
    EXPECT_EQ(exhaustive.candidates_checked, 3u + 3u);  // partitions of 6 into 2 and 3 parts
  }
  EXPECT_GT(checked, 10);
  EXPECT_FALSE(search_catalyst(kZeta, kOmega, {.grid_q = 8, .lemma1_pruning = false}).catalyst.has_value());
}

TEST(SearchCatalyst, DeterministicAcrossThreadCounts) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_spectrum(rng, 3, 5);
    const auto b = random_spectrum(rng, 2, 4);
    const auto one = search_catalyst(a, b, {.grid_q = 12, .threads = 1});
    const auto four = search_catalyst(a, b, {.grid_q = 12, .threads = 4});
    EXPECT_EQ(one.catalyst, four.catalyst);
    EXPECT_EQ(one.pruned, four.pruned);
  }
}

TEST(CatalysisProperties, DeterministicPairsCatalyzeWithAnything) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_spectrum(rng, 1, 5);
    const auto b = random_spectrum(rng, 1, 5);
    const auto chi = random_spectrum(rng, 1, 4);
    if (nielsen_deterministic(a, b)) EXPECT_TRUE(catalyzes(a, b, chi));
    EXPECT_EQ(catalyzes(a, b, chi), multicopy_elocc_check(a, b, chi, 1));
  }
}
