#include "t3/tensor_io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string_view>
#include <vector>

namespace t3 {

namespace {

constexpr std::string_view kMagic = "T3B1";
constexpr std::size_t kHeaderBytes = 4 + 3 * 8;

using Kind = FormatError::Kind;

void put_u64(std::ostream& os, std::uint64_t v) {
  std::array<char, 8> bytes{};
  for (std::size_t b = 0; b < 8; ++b) bytes[b] = static_cast<char>((v >> (8 * b)) & 0xffu);
  os.write(bytes.data(), 8);
}

std::uint64_t get_u64(std::string_view data, std::size_t offset) {
  std::uint64_t v = 0;
  for (std::size_t b = 0; b < 8; ++b) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data[offset + b])) << (8 * b);
  }
  return v;
}

std::size_t checked_count(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / 8;
  if (m == 0 || n == 0 || p == 0) {
    throw FormatError(Kind::malformed_header, "header dimensions must be positive");
  }
  if (m > limit / n || m * n > limit / p) {
    throw FormatError(Kind::malformed_header, "header dimensions overflow");
  }
  return static_cast<std::size_t>(m * n * p);
}

DenseTensor3 parse_binary(std::string_view data) {
  if (data.size() < kHeaderBytes) {
    throw FormatError(Kind::malformed_header,
                      "binary header truncated: " + std::to_string(data.size()) +
                          " bytes, expected " + std::to_string(kHeaderBytes));
  }
  const std::uint64_t m = get_u64(data, 4), n = get_u64(data, 12), p = get_u64(data, 20);
  const std::size_t count = checked_count(m, n, p);
  const std::size_t available = (data.size() - kHeaderBytes) / 8;
  if (available < count) {
    throw FormatError(Kind::truncated_payload,
                      "truncated payload: expected " + std::to_string(count) +
                          " values, found " + std::to_string(available) +
                          " (file ends at byte offset " + std::to_string(data.size()) + ")");
  }
  if (data.size() != kHeaderBytes + 8 * count) {
    throw FormatError(Kind::malformed_value,
                      "unexpected trailing data at byte offset " +
                          std::to_string(kHeaderBytes + 8 * count));
  }
  std::vector<double> values(count);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t offset = kHeaderBytes + 8 * t;
    values[t] = std::bit_cast<double>(get_u64(data, offset));
    if (!std::isfinite(values[t])) {
      throw FormatError(Kind::non_finite_value,
                        "non-finite value at byte offset " + std::to_string(offset));
    }
  }
  return DenseTensor3(m, n, p, std::move(values));
}

struct Token {
  std::string_view text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view data) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t t = 0;
  while (t < data.size()) {
    const char c = data[t];
    if (c == '\n') {
      ++line;
      ++t;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++t;
    } else {
      const std::size_t start = t;
      while (t < data.size() && data[t] != ' ' && data[t] != '\t' && data[t] != '\r' &&
             data[t] != '\n') {
        ++t;
      }
      tokens.push_back({data.substr(start, t - start), line});
    }
  }
  return tokens;
}

std::uint64_t parse_dim(const Token& tok) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw FormatError(Kind::malformed_header, "malformed header dimension '" +
                                                  std::string(tok.text) + "' on line " +
                                                  std::to_string(tok.line));
  }
  return v;
}

DenseTensor3 parse_text(std::string_view data) {
  const std::vector<Token> tokens = tokenize(data);
  if (tokens.size() < 4 || tokens[0].text != "T3" || tokens[1].line != 1 ||
      tokens[2].line != 1 || tokens[3].line != 1 || (tokens.size() > 4 && tokens[4].line == 1)) {
    throw FormatError(Kind::malformed_header, "line 1: expected header 'T3 m n p'");
  }
  const std::size_t count =
      checked_count(parse_dim(tokens[1]), parse_dim(tokens[2]), parse_dim(tokens[3]));
  const std::size_t found = tokens.size() - 4;
  if (found < count) {
    const std::size_t last_line = tokens.back().line;
    throw FormatError(Kind::truncated_payload,
                      "truncated payload: expected " + std::to_string(count) +
                          " values, found " + std::to_string(found) + " (input ends at line " +
                          std::to_string(last_line) + ")");
  }
  if (found > count) {
    throw FormatError(Kind::malformed_value, "unexpected extra value on line " +
                                                 std::to_string(tokens[4 + count].line));
  }
  std::vector<double> values(count);
  for (std::size_t t = 0; t < count; ++t) {
    const Token& tok = tokens[4 + t];
    std::string_view s = tok.text;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw FormatError(Kind::malformed_value, "malformed value '" + std::string(tok.text) +
                                                   "' on line " + std::to_string(tok.line));
    }
    if (!std::isfinite(v)) {
      throw FormatError(Kind::non_finite_value,
                        "non-finite value on line " + std::to_string(tok.line));
    }
    values[t] = v;
  }
  return DenseTensor3(parse_dim(tokens[1]), parse_dim(tokens[2]), parse_dim(tokens[3]),
                      std::move(values));
}

}  // namespace

void write_tensor(std::ostream& os, const DenseTensor3& a, TensorFormat format) {
  if (format == TensorFormat::binary) {
    os.write(kMagic.data(), static_cast<std::streamsize>(kMagic.size()));
    put_u64(os, a.rows());
    put_u64(os, a.cols());
    put_u64(os, a.depth());
    for (double v : a.values()) put_u64(os, std::bit_cast<std::uint64_t>(v));
  } else {
    os << "T3 " << a.rows() << ' ' << a.cols() << ' ' << a.depth() << '\n';
    std::array<char, 32> buf{};
    for (std::size_t k = 0; k < a.depth(); ++k) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          std::snprintf(buf.data(), buf.size(), "%.17g", a(i, j, k));
          if (j > 0) os << ' ';
          os << buf.data();
        }
        os << '\n';
      }
      if (k + 1 < a.depth()) os << '\n';
    }
  }
  if (!os) throw FormatError(Kind::io, "failed to write tensor");
}

DenseTensor3 read_tensor(std::istream& is) {
  const std::string data((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  const std::string_view view(data);
  if (view.substr(0, kMagic.size()) == kMagic) return parse_binary(view);
  if (view.substr(0, 2) == "T3") return parse_text(view);
  throw FormatError(Kind::malformed_header, "unrecognized tensor file header at byte offset 0");
}

TensorFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".txt" ? TensorFormat::text : TensorFormat::binary;
}

void write_tensor(const std::filesystem::path& path, const DenseTensor3& a) {
  write_tensor(path, a, format_for_path(path));
}

void write_tensor(const std::filesystem::path& path, const DenseTensor3& a,
                  TensorFormat format) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw FormatError(Kind::io, "cannot open '" + path.string() + "' for writing");
  write_tensor(os, a, format);
}

DenseTensor3 read_tensor(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError(Kind::io, "cannot open '" + path.string() + "'");
  return read_tensor(is);
}

}  // namespace t3
