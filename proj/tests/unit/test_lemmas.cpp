#include <gtest/gtest.h>

#include "qfid/errors.hpp"
#include "qfid/kernels.hpp"
#include "qfid/lemmas.hpp"
#include "qfid/states.hpp"

namespace qfid {
namespace {

TEST(Cyclicity, IdentityFactor) {
  const ComplexMatrix a = random_ginibre(6, 1);
  const CyclicityReport r = check_cyclicity(ComplexMatrix::identity(6), a, 1e-12);
  EXPECT_TRUE(r.holds);
  EXPECT_LE(r.max_deviation, 1e-14);
}

TEST(Cyclicity, RandomPairAt1e8) {
  const CyclicityReport r = check_cyclicity(random_ginibre(16, 2), random_ginibre(16, 3), 1e-8);
  EXPECT_TRUE(r.holds) << r.max_deviation;
  EXPECT_EQ(r.spectrum_ab.size(), 16u);
}

TEST(Cyclicity, SymmetricInArguments) {
  const ComplexMatrix a = random_ginibre(12, 4);
  const ComplexMatrix b = random_ginibre(12, 5);
  EXPECT_EQ(check_cyclicity(a, b, 1e-8).max_deviation, check_cyclicity(b, a, 1e-8).max_deviation);
}

TEST(Cyclicity, DiagonalFactorsAndDimensionCheck) {
  const std::vector<double> d1{1, 2};
  const std::vector<double> d2{3, 5};
  const CyclicityReport r = check_cyclicity(ComplexMatrix::diagonal(d1), ComplexMatrix::diagonal(d2), 1e-8);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.max_deviation, 0.0);
  EXPECT_THROW(check_cyclicity(ComplexMatrix(2), ComplexMatrix(3), 1e-8), DimensionMismatch);
}

TEST(MappedCyclicity, SelfPair) {
  const ComplexMatrix r = random_density(8, 8, 6).matrix();
  EXPECT_TRUE(check_mapped_cyclicity(r, r, 1e-8).holds);
}

TEST(MappedCyclicity, CommutingPairAtSolverNoise) {
  const CommutingPair c = random_commuting_pair(10, 7);
  const CyclicityReport r = check_mapped_cyclicity(c.rho.matrix(), c.sigma.matrix(), 1e-8);
  EXPECT_TRUE(r.holds);
  EXPECT_LE(r.max_deviation, 1e-12);
}

TEST(MappedCyclicity, RandomDensityPairD32) {
  const CyclicityReport r =
      check_mapped_cyclicity(random_density(32, 32, 8).matrix(), random_density(32, 32, 9).matrix(), 1e-8);
  EXPECT_TRUE(r.holds) << r.max_deviation;
}

TEST(MappedCyclicity, RejectsNonPsd) {
  const std::vector<double> d{1, -0.5};
  EXPECT_THROW(check_mapped_cyclicity(ComplexMatrix::diagonal(d), ComplexMatrix::identity(2), 1e-8), NotPsd);
  EXPECT_THROW(check_mapped_cyclicity(random_ginibre(3, 1), ComplexMatrix::identity(3), 1e-8), NotHermitian);
}

TEST(TraceEigensum, RandomMatrices) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_LE(trace_eigensum_defect(random_ginibre(3 + seed, seed)), 1e-10);
  }
}

}  // namespace
}  // namespace qfid
