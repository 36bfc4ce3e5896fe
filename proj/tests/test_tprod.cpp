#include <gtest/gtest.h>

#include <cmath>

#include "t3/errors.hpp"
#include "t3/random.hpp"
#include "t3/tprod.hpp"
#include "test_support.hpp"

namespace t3 {
namespace {

using testing::rel_error;

TEST(Tprod, TubeExample) {
  const DenseTensor3 c = tprod(DenseTensor3(1, 1, 2, {3, 1}), DenseTensor3(1, 1, 2, {2, 0}));
  EXPECT_NEAR(c.at(1, 1, 1), 6.0, 1e-14);
  EXPECT_NEAR(c.at(1, 1, 2), 2.0, 1e-14);
}

TEST(Tprod, DepthOneIsMatrixProduct) {
  Rng rng(2);
  const DenseTensor3 a = gaussian_tensor(3, 4, 1, rng);
  const DenseTensor3 b = gaussian_tensor(4, 2, 1, rng);
  const Matrix expected = multiply(a.frontal_slice(1), b.frontal_slice(1));
  const DenseTensor3 c = tprod(a, b);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(c(i, j, 0), expected(i, j), 1e-13);
}

TEST(Tprod, ShapeMismatch) {
  EXPECT_THROW(tprod(DenseTensor3(2, 3, 2), DenseTensor3(2, 3, 2)), DimensionError);
  EXPECT_THROW(tprod(DenseTensor3(2, 3, 2), DenseTensor3(3, 3, 3)), DimensionError);
  EXPECT_THROW(tprod_bcirc(DenseTensor3(2, 3, 2), DenseTensor3(2, 3, 2)), DimensionError);
}

TEST(Tprod, AgreesWithBlockCirculantPath) {
  Rng dims(5);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t m = dims.uniform(1, 6), n = dims.uniform(1, 6), t = dims.uniform(1, 6);
    const std::size_t p = dims.uniform(1, 9);
    Rng rng(dims.next_seed());
    const DenseTensor3 a = gaussian_tensor(m, n, p, rng);
    const DenseTensor3 b = gaussian_tensor(n, t, p, rng);
    const DenseTensor3 reference = tprod_bcirc(a, b);
    EXPECT_LE(rel_error(tprod(a, b, Exec::serial), reference), 1e-10);
    EXPECT_LE(rel_error(tprod(a, b, Exec::parallel), reference), 1e-10);
  }
}

TEST(Tprod, Associative) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const DenseTensor3 a = gaussian_tensor(3, 4, 5, rng);
    const DenseTensor3 b = gaussian_tensor(4, 2, 5, rng);
    const DenseTensor3 c = gaussian_tensor(2, 3, 5, rng);
    EXPECT_LE(rel_error(tprod(tprod(a, b), c), tprod(a, tprod(b, c))), 1e-12);
  }
}

TEST(Tprod, DistributesOverAddition) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const DenseTensor3 a = gaussian_tensor(3, 4, 6, rng);
    const DenseTensor3 b = gaussian_tensor(4, 2, 6, rng);
    const DenseTensor3 c = gaussian_tensor(4, 2, 6, rng);
    EXPECT_LE(rel_error(tprod(a, b + c), tprod(a, b) + tprod(a, c)), 1e-12);
  }
}

TEST(Identity, Layout) {
  const DenseTensor3 i = identity(3, 4);
  EXPECT_EQ(i.frontal_slice(1), Matrix::identity(3));
  for (std::size_t k = 2; k <= 4; ++k) EXPECT_EQ(i.frontal_slice(k), Matrix(3, 3));
}

TEST(Identity, IsNeutral) {
  const DenseTensor3 a = gaussian_tensor(3, 5, 4, 7);
  EXPECT_LE(testing::max_abs_diff(tprod(identity(3, 4), a), a), 1e-14);
  EXPECT_LE(testing::max_abs_diff(tprod(a, identity(5, 4)), a), 1e-14);
}

TEST(Transpose, ReversesTrailingSlices) {
  DenseTensor3 a(1, 2, 3, {1, 2, 3, 4, 5, 6});
  const DenseTensor3 t = transpose(a);
  ASSERT_EQ(t.rows(), 2u);
  ASSERT_EQ(t.cols(), 1u);
  EXPECT_EQ(t.frontal_slice(1), Matrix(2, 1, {1, 2}));
  EXPECT_EQ(t.frontal_slice(2), Matrix(2, 1, {5, 6}));
  EXPECT_EQ(t.frontal_slice(3), Matrix(2, 1, {3, 4}));
}

TEST(Transpose, InvolutionAndProductRule) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const DenseTensor3 a = gaussian_tensor(3, 4, 5, rng);
    const DenseTensor3 b = gaussian_tensor(4, 2, 5, rng);
    EXPECT_EQ(transpose(transpose(a)), a);
    EXPECT_LE(rel_error(transpose(tprod(a, b)), tprod(transpose(b), transpose(a))), 1e-12);
  }
}

TEST(Transpose, FourierSlicesAreConjugateTransposes) {
  const DenseTensor3 a = gaussian_tensor(3, 2, 6, 4);
  const SpectralTensor3 fa = fft_mode3(a);
  const SpectralTensor3 ft = fft_mode3(transpose(a));
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_LE(testing::max_abs_diff(ft.slices[k], adjoint(fa.slices[k])), 1e-12);
  }
}

TEST(Inverse, TubeExample) {
  const DenseTensor3 inv = inverse(DenseTensor3(1, 1, 2, {3, 1}));
  EXPECT_NEAR(inv.at(1, 1, 1), 0.375, 1e-14);
  EXPECT_NEAR(inv.at(1, 1, 2), -0.125, 1e-14);
}

TEST(Inverse, TwoSidedInverse) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DenseTensor3 a = gaussian_tensor(4, 4, 1 + seed % 6, seed);
    const DenseTensor3 inv = inverse(a);
    const DenseTensor3 id = identity(4, a.depth());
    EXPECT_LE(testing::max_abs_diff(tprod(a, inv), id), 1e-8);
    EXPECT_LE(testing::max_abs_diff(tprod(inv, a), id), 1e-8);
  }
}

TEST(Inverse, SingularSliceIsReported) {
  // Fourier slices of the tube (1, -1, 0, 0) are 0, 1+i, 2, 1-i.
  try {
    inverse(DenseTensor3(1, 1, 4, {1, -1, 0, 0}));
    FAIL() << "expected SingularSliceError";
  } catch (const SingularSliceError& e) {
    EXPECT_EQ(e.slice(), 1u);
  }
  EXPECT_THROW(inverse(DenseTensor3(2, 3, 2)), DimensionError);
}

TEST(Orthogonality, Predicates) {
  EXPECT_TRUE(is_orthogonal(identity(4, 3), 1e-12));
  EXPECT_EQ(orthogonality_defect(identity(4, 3)), 0.0);
  DenseTensor3 twice = 2.0 * identity(3, 2);
  EXPECT_FALSE(is_partially_orthogonal(twice, 1e-8));
  // A wide tensor cannot have orthonormal lateral slices.
  EXPECT_FALSE(is_partially_orthogonal(gaussian_tensor(2, 3, 2, 1), 1e3));
}

TEST(Orthogonality, RandomOrthogonalTensors) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t p = 1 + seed % 7;
    const DenseTensor3 q = random_orthogonal(5, 5, p, seed);
    EXPECT_TRUE(is_orthogonal(q, 1e-12));
    const DenseTensor3 w = random_orthogonal(6, 3, p, seed);
    EXPECT_EQ(w.cols(), 3u);
    EXPECT_TRUE(is_partially_orthogonal(w, 1e-12));
    EXPECT_EQ(random_orthogonal(6, 3, p, seed), w);
  }
  EXPECT_THROW(random_orthogonal(2, 3, 2, 0), DimensionError);
}

}  // namespace
}  // namespace t3
