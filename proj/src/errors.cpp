#include "ncgeo/errors.hpp"

namespace ncgeo {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::faithfulness: return "faithfulness";
    case ErrorCode::non_skew: return "non-skew";
    case ErrorCode::inconsistent_algebra: return "inconsistent-algebra";
    case ErrorCode::word_cap_exceeded: return "word-cap-exceeded";
    case ErrorCode::grading_cap_exceeded: return "grading-cap-exceeded";
    case ErrorCode::unsupported_class: return "unsupported-class";
    case ErrorCode::constraint_violation: return "constraint-violation";
    case ErrorCode::config_parse: return "config-parse";
    case ErrorCode::config_missing_section: return "config-missing-section";
    case ErrorCode::config_bad_value: return "config-bad-value";
  }
  return "unknown";
}

}  // namespace ncgeo
