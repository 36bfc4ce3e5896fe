#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace t3 {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// A spectrum that does not satisfy conjugate symmetry would invert to a
// complex tensor.
class SymmetryError : public Error {
 public:
  SymmetryError(double defect, double threshold);
  double defect() const { return defect_; }
  double threshold() const { return threshold_; }

 private:
  double defect_;
  double threshold_;
};

class SingularSliceError : public Error {
 public:
  SingularSliceError(std::size_t slice, double condition);
  // 1-based Fourier slice index.
  std::size_t slice() const { return slice_; }
  double condition() const { return condition_; }

 private:
  std::size_t slice_;
  double condition_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace t3
