#include <gtest/gtest.h>

#include <bit>
#include <cstring>
#include <filesystem>
#include <limits>
#include <sstream>

#include "t3/random.hpp"
#include "t3/tensor_io.hpp"

namespace t3 {
namespace {

namespace fs = std::filesystem;

std::string binary_bytes(const DenseTensor3& a) {
  std::ostringstream os(std::ios::binary);
  write_tensor(os, a, TensorFormat::binary);
  return os.str();
}

FormatError::Kind read_error_kind(const std::string& data) {
  std::istringstream is(data, std::ios::binary);
  try {
    read_tensor(is);
  } catch (const FormatError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no FormatError";
  return FormatError::Kind::io;
}

TEST(BinaryFormat, HeaderLayout) {
  const std::string bytes = binary_bytes(DenseTensor3(2, 1, 3, {1, 2, 3, 4, 5, 6}));
  ASSERT_EQ(bytes.size(), 4u + 24u + 48u);
  EXPECT_EQ(bytes.substr(0, 4), "T3B1");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 2);
  EXPECT_EQ(static_cast<unsigned char>(bytes[12]), 1);
  EXPECT_EQ(static_cast<unsigned char>(bytes[20]), 3);
  for (std::size_t b = 5; b < 12; ++b) EXPECT_EQ(bytes[b], 0);
  double first = 0.0;
  std::memcpy(&first, bytes.data() + 28, 8);
  EXPECT_EQ(first, 1.0);
}

TEST(BinaryFormat, RoundTripIsBitwise) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DenseTensor3 a = gaussian_tensor(3, 4, 1 + seed, seed);
    a(0, 0, 0) = -0.0;
    a(1, 1, 0) = std::numeric_limits<double>::denorm_min();
    const std::string bytes = binary_bytes(a);
    std::istringstream is(bytes, std::ios::binary);
    const DenseTensor3 b = read_tensor(is);
    ASSERT_TRUE(b.same_shape(a));
    EXPECT_EQ(std::memcmp(a.values().data(), b.values().data(), 8 * a.size()), 0);
    EXPECT_EQ(binary_bytes(b), bytes);
  }
}

TEST(TextFormat, RoundTripIsExact) {
  const DenseTensor3 a = gaussian_tensor(2, 3, 4, 9);
  std::ostringstream os;
  write_tensor(os, a, TensorFormat::text);
  EXPECT_EQ(os.str().substr(0, 9), "T3 2 3 4\n");
  std::istringstream is(os.str());
  EXPECT_EQ(read_tensor(is), a);
}

TEST(TextFormat, HandWritten) {
  std::istringstream is("T3 1 1 2\n3\n+1.0e0\n");
  const DenseTensor3 a = read_tensor(is);
  EXPECT_EQ(a.tube(1, 1), (std::vector<double>{3, 1}));
}

TEST(Errors, Binary) {
  const std::string good = binary_bytes(gaussian_tensor(2, 2, 2, 1));
  EXPECT_EQ(read_error_kind(good.substr(0, 10)), FormatError::Kind::malformed_header);
  EXPECT_EQ(read_error_kind(good.substr(0, good.size() - 8)),
            FormatError::Kind::truncated_payload);
  std::string zero_dim = good;
  zero_dim[4] = 0;
  EXPECT_EQ(read_error_kind(zero_dim), FormatError::Kind::malformed_header);
  std::string nan = good;
  const double q = std::numeric_limits<double>::quiet_NaN();
  std::memcpy(nan.data() + 28 + 8, &q, 8);
  EXPECT_EQ(read_error_kind(nan), FormatError::Kind::non_finite_value);
  EXPECT_EQ(read_error_kind(good + "x"), FormatError::Kind::malformed_value);
}

TEST(Errors, Text) {
  EXPECT_EQ(read_error_kind("T3 1 1\n1\n"), FormatError::Kind::malformed_header);
  EXPECT_EQ(read_error_kind("T4 1 1 1\n1\n"), FormatError::Kind::malformed_header);
  EXPECT_EQ(read_error_kind("T3 1 x 1\n1\n"), FormatError::Kind::malformed_header);
  EXPECT_EQ(read_error_kind("T3 1 1 3\n1 2\n"), FormatError::Kind::truncated_payload);
  EXPECT_EQ(read_error_kind("T3 1 1 2\n1 abc\n"), FormatError::Kind::malformed_value);
  EXPECT_EQ(read_error_kind("T3 1 1 1\n1 2\n"), FormatError::Kind::malformed_value);
  EXPECT_EQ(read_error_kind("T3 1 1 1\ninf\n"), FormatError::Kind::non_finite_value);
  EXPECT_EQ(read_error_kind(""), FormatError::Kind::malformed_header);
}

TEST(Errors, MessagesLocateTheProblem) {
  std::istringstream is("T3 1 1 2\n1\nbad\n");
  try {
    read_tensor(is);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Files, ExtensionSelectsFormat) {
  EXPECT_EQ(format_for_path("a.txt"), TensorFormat::text);
  EXPECT_EQ(format_for_path("a.t3b"), TensorFormat::binary);
  EXPECT_EQ(format_for_path("a"), TensorFormat::binary);

  const fs::path dir = fs::temp_directory_path() / "t3_io_test";
  fs::create_directories(dir);
  const DenseTensor3 a = gaussian_tensor(3, 2, 2, 4);
  write_tensor(dir / "a.txt", a);
  write_tensor(dir / "a.t3b", a);
  EXPECT_EQ(read_tensor(dir / "a.txt"), a);
  EXPECT_EQ(read_tensor(dir / "a.t3b"), a);
  EXPECT_THROW(read_tensor(dir / "missing.t3b"), FormatError);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace t3
