#ifndef NCGEO_ERRORS_HPP
#define NCGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncgeo {

enum class ErrorCode {
  invalid_argument,
  faithfulness,        // a-vector has a zero component
  non_skew,            // deformation matrix fails Theta + Theta^T = 0
  inconsistent_algebra,  // structure constants fail symmetry/Jacobi checks
  word_cap_exceeded,
  grading_cap_exceeded,
  unsupported_class,   // adjoint action not exponential-linear
  constraint_violation,  // ODE energy constraint drifted beyond tolerance
  config_parse,
  config_missing_section,
  config_bad_value,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ncgeo

#endif
