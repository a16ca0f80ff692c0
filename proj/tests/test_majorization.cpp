#include <gtest/gtest.h>

#include <random>

#include "locc/majorization.hpp"
#include "oracle.hpp"

using namespace locc;
using locc::testing::dense_majorized_by;
using locc::testing::dense_vidal;
using locc::testing::random_spectrum;
using locc::testing::spectrum;

namespace {

const SchmidtSpectrum kFour = spectrum({"0.4", "0.36", "0.14", "0.1"});
const SchmidtSpectrum kThree = spectrum({"0.5", "0.25", "0.25"});
const SchmidtSpectrum kPsi2c = spectrum({"0.4", "0.4", "0.1", "0.1"});
const SchmidtSpectrum kPhi2c = spectrum({"0.5", "0.27", "0.23"});
const SchmidtSpectrum kPhi5c = spectrum({"0.48", "0.27", "0.25"});
const SchmidtSpectrum kZeta = spectrum({"0.4", "0.4", "0.2"});
const SchmidtSpectrum kOmega = spectrum({"0.5", "0.25", "0.25"});

}  // namespace

TEST(MajorizedBy, UniformIsBottom) {
  EXPECT_TRUE(majorized_by(maximally_entangled(4), kFour));
  EXPECT_TRUE(majorized_by(maximally_entangled(4), kPsi2c));
  EXPECT_FALSE(majorized_by(kFour, maximally_entangled(4)));
}

TEST(MajorizedBy, TwoCopyVectors) {
  // The second vector carries seven explicit zeros.
  const auto psi2 = spectrum({".16", ".144", ".144", ".1296", ".056", ".056", ".0504", ".0504", ".04", ".04", ".036",
                              ".036", ".0196", ".014", ".014", ".01"});
  const auto phi2 = spectrum({".25", ".125", ".125", ".125", ".125", ".0625", ".0625", ".0625", ".0625", "0", "0",
                              "0", "0", "0", "0", "0"});
  EXPECT_EQ(phi2.dim(), 9);
  EXPECT_TRUE(majorized_by(psi2, phi2));
  EXPECT_FALSE(majorized_by(phi2, psi2));
}

TEST(MajorizedBy, SingleCopyIncomparable) {
  EXPECT_FALSE(majorized_by(kFour, kThree));
  EXPECT_FALSE(majorized_by(kThree, kFour));
}

TEST(Nielsen, Examples) {
  EXPECT_TRUE(nielsen_deterministic(maximally_entangled(3), kThree));
  EXPECT_TRUE(nielsen_deterministic(tensor_power(kPsi2c, 3), tensor_power(kPhi2c, 3)));
  EXPECT_FALSE(nielsen_deterministic(kPsi2c, kPhi5c));
}

TEST(VidalPmax, Examples) {
  EXPECT_EQ(vidal_pmax(kPsi2c, kPhi2c), Rational(20, 23));
  EXPECT_EQ(vidal_pmax(kFour, kFour), 1);
  EXPECT_EQ(vidal_pmax(kZeta, kOmega), Rational(4, 5));
  EXPECT_EQ(vidal_pmax(kFour, kThree), Rational(24, 25));
  EXPECT_EQ(vidal_pmax(kThree, kFour), 0);  // lower source rank
  EXPECT_EQ(vidal_pmax(kFour, spectrum({"1"})), 1);
}

TEST(VidalPmax, MaximallyEntangledTargetIsRankTimesSmallest) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto s = random_spectrum(rng, 1, 7);
    const auto d = s.dim().get_ui();
    EXPECT_EQ(vidal_pmax(s, maximally_entangled(d)), s.smallest() * d);
  }
}

TEST(Compare, Examples) {
  EXPECT_EQ(compare(kFour, kThree), Comparability::Incomparable);
  EXPECT_EQ(compare(maximally_entangled(3), kThree), Comparability::SourceToTarget);
  EXPECT_EQ(compare(kThree, maximally_entangled(3)), Comparability::TargetToSource);
  EXPECT_EQ(compare(kThree, kThree), Comparability::Equivalent);
}

TEST(MajorizationProperties, BreakpointsMatchFullScan) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_spectrum(rng, 1, 6, 4);
    const auto b = random_spectrum(rng, 1, 6, 4);
    for (unsigned k = 1; k <= 3; ++k) {
      const auto ak = tensor_power(a, k);
      const auto bk = tensor_power(b, k);
      ASSERT_EQ(majorized_by(ak, bk), dense_majorized_by(ak, bk));
      ASSERT_EQ(vidal_pmax(ak, bk), dense_vidal(ak, bk)) << to_string(a) << " vs " << to_string(b) << " k=" << k;
    }
  }
}

TEST(MajorizationProperties, OrderLaws) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_spectrum(rng, 1, 6, 3);
    const auto b = random_spectrum(rng, 1, 6, 3);
    const auto c = random_spectrum(rng, 1, 6, 3);
    EXPECT_TRUE(majorized_by(a, a));
    if (majorized_by(a, b) && majorized_by(b, a)) EXPECT_EQ(a, b);
    if (majorized_by(a, b) && majorized_by(b, c)) EXPECT_TRUE(majorized_by(a, c));
    EXPECT_EQ(vidal_pmax(a, b) == 1, nielsen_deterministic(a, b));
    if (majorized_by(a, b)) EXPECT_TRUE(majorized_by(tensor_product(a, c), tensor_product(b, c)));
  }
}
