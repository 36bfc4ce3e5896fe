#include <gtest/gtest.h>

#include <cmath>

#include "t3/random.hpp"
#include "t3/tprod.hpp"
#include "t3/tsvd.hpp"
#include "test_support.hpp"

namespace t3 {
namespace {

using testing::rel_error;

DenseTensor3 reconstruct(const TsvdFactors& f) {
  return tprod(tprod(f.u, f.s), transpose(f.v));
}

TEST(Tsvd, DepthOneTwoByTwo) {
  const DenseTensor3 a(2, 2, 1, {3, 0, 4, 5});
  const SingularSpectrum s = singular_values(a);
  EXPECT_NEAR(s[1], std::sqrt(45.0), 1e-12);
  EXPECT_NEAR(s[2], std::sqrt(5.0), 1e-12);
}

TEST(Tsvd, TubeSpectrum) {
  // Fourier slices of (3, 1) are 4 and 2.
  const SingularSpectrum s = singular_values(DenseTensor3(1, 1, 2, {3, 1}));
  ASSERT_EQ(s.values.size(), 1u);
  EXPECT_NEAR(s[1], 3.0, 1e-14);
  EXPECT_NEAR(s.per_slice(0, 0), 4.0, 1e-14);
  EXPECT_NEAR(s.per_slice(1, 0), 2.0, 1e-14);
}

TEST(Tsvd, ZeroTensor) {
  const DenseTensor3 z(3, 2, 4);
  const SingularSpectrum s = singular_values(z);
  EXPECT_EQ(s.values, (std::vector<double>{0.0, 0.0}));
  const TsvdFactors f = tsvd(z);
  EXPECT_TRUE(is_orthogonal(f.u, 1e-12));
  EXPECT_TRUE(is_orthogonal(f.v, 1e-12));
}

TEST(Tsvd, DiagonalTensorValues) {
  const std::vector<double> diag{5.0, -2.0, 1.0};
  const DenseTensor3 a = diagonal_tensor(4, 3, 5, diag);
  const SingularSpectrum s = singular_values(a);
  EXPECT_NEAR(s[1], 5.0, 1e-13);
  EXPECT_NEAR(s[2], 2.0, 1e-13);
  EXPECT_NEAR(s[3], 1.0, 1e-13);
}

class TsvdShapes
    : public ::testing::TestWithParam<std::tuple<std::size_t, std::size_t, std::size_t>> {};

TEST_P(TsvdShapes, FactorizationProperties) {
  const auto [m, n, p] = GetParam();
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const DenseTensor3 a = gaussian_tensor(m, n, p, seed + 100 * m + 10 * n + p);
    const TsvdFactors f = tsvd(a);
    EXPECT_LE(rel_error(reconstruct(f), a), 1e-9);
    EXPECT_LE(orthogonality_defect(f.u), 1e-9);
    EXPECT_LE(orthogonality_defect(f.v), 1e-9);
    EXPECT_TRUE(is_orthogonal(f.u, 1e-9));
    EXPECT_TRUE(is_orthogonal(f.v, 1e-9));
    EXPECT_LE(f_diagonal_residue(f.s), 1e-10 * frobenius_norm(a));

    const SingularSpectrum s = singular_values(a);
    const std::vector<double> oracle = testing::oracle_tensor_singular_values(a);
    ASSERT_EQ(s.values.size(), oracle.size());
    for (std::size_t j = 0; j < oracle.size(); ++j) {
      EXPECT_NEAR(s.values[j], oracle[j], 1e-10 * (1.0 + oracle[0]));
      if (j > 0) {
        EXPECT_GE(s.values[j - 1], s.values[j]);
      }
    }
    EXPECT_EQ(spectral_norm(a), s.largest());
  }
}

INSTANTIATE_TEST_SUITE_P(Shapes, TsvdShapes,
                         ::testing::Values(std::make_tuple(1, 1, 1), std::make_tuple(3, 3, 1),
                                           std::make_tuple(4, 3, 2), std::make_tuple(3, 4, 3),
                                           std::make_tuple(5, 5, 7), std::make_tuple(6, 2, 8),
                                           std::make_tuple(2, 6, 5),
                                           std::make_tuple(20, 15, 8)));

TEST(Tsvd, DepthOneMatchesMatrixSvd) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DenseTensor3 a = gaussian_tensor(5, 4, 1, seed);
    const std::vector<double> expected = testing::bdc_singular_values(a.frontal_slice(1));
    const SingularSpectrum s = singular_values(a);
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(s.values[j], expected[j], 1e-10);
  }
}

TEST(Tsvd, FirstSliceOfSIsMeanSpectrum) {
  const DenseTensor3 a = gaussian_tensor(5, 3, 6, 17);
  const TsvdFactors f = tsvd(a);
  const SingularSpectrum s = singular_values(a);
  for (std::size_t j = 1; j <= 3; ++j) EXPECT_NEAR(f.s.at(j, j, 1), s[j], 1e-10);
}

TEST(Tsvd, OrthogonalInvariance) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DenseTensor3 a = gaussian_tensor(4, 3, 5, seed);
    const DenseTensor3 q = random_orthogonal(4, 4, 5, seed + 50);
    const SingularSpectrum s = singular_values(a);
    const SingularSpectrum t = singular_values(tprod(q, a));
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(s.values[j], t.values[j], 1e-10);
  }
}

TEST(Tsvd, PerSliceRowsAreConjugatePaired) {
  const SingularSpectrum s = singular_values(gaussian_tensor(3, 4, 7, 2));
  for (std::size_t k = 1; k < 7; ++k)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(s.per_slice(k, j), s.per_slice(7 - k, j));
}

TEST(FDiagonalResidue, CountsOffDiagonalMass) {
  DenseTensor3 s(2, 2, 2);
  s(0, 0, 0) = 7.0;
  EXPECT_EQ(f_diagonal_residue(s), 0.0);
  s(0, 1, 1) = 3.0;
  s(1, 0, 0) = 4.0;
  EXPECT_DOUBLE_EQ(f_diagonal_residue(s), 5.0);
}

}  // namespace
}  // namespace t3
