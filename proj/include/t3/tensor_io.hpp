#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "t3/errors.hpp"
#include "t3/tensor.hpp"

namespace t3 {

// Binary: "T3B1", m, n, p as u64 little-endian, then m*n*p IEEE-754 doubles
// little-endian in frontal-slice-major, row-major order.
// Text: a "T3 m n p" line, then whitespace-separated values in the same order.

enum class TensorFormat { binary, text };

class FormatError : public Error {
 public:
  enum class Kind { io, malformed_header, malformed_value, truncated_payload, non_finite_value };

  FormatError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

void write_tensor(std::ostream& os, const DenseTensor3& a, TensorFormat format);
// Detects the format from the leading bytes.
DenseTensor3 read_tensor(std::istream& is);

// Files ending in ".txt" are written as text, everything else as binary.
void write_tensor(const std::filesystem::path& path, const DenseTensor3& a);
void write_tensor(const std::filesystem::path& path, const DenseTensor3& a,
                  TensorFormat format);
DenseTensor3 read_tensor(const std::filesystem::path& path);

TensorFormat format_for_path(const std::filesystem::path& path);

}  // namespace t3
