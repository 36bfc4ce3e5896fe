#include "t3/errors.hpp"

#include <sstream>

namespace t3 {

namespace {

std::string symmetry_message(double defect, double threshold) {
  std::ostringstream os;
  os << "spectrum violates conjugate symmetry: defect " << defect
     << " exceeds " << threshold;
  return os.str();
}

std::string singular_message(std::size_t slice, double condition) {
  std::ostringstream os;
  os << "Fourier slice " << slice << " is numerically singular (condition "
     << condition << ")";
  return os.str();
}

}  // namespace

SymmetryError::SymmetryError(double defect, double threshold)
    : Error(symmetry_message(defect, threshold)),
      defect_(defect),
      threshold_(threshold) {}

SingularSliceError::SingularSliceError(std::size_t slice, double condition)
    : Error(singular_message(slice, condition)),
      slice_(slice),
      condition_(condition) {}

}  // namespace t3
