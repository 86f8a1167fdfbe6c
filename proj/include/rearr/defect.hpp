#pragma once

#include <stdexcept>
#include <string>

namespace rearr {

// Raised when an internal guarantee fails (bounded search exhausted, a
// postcondition not met after replay). Distinct from invalid_argument
// so callers can map it to a different exit status: this is a bug in
// the machinery, not bad input.
struct defect_error : std::logic_error {
  explicit defect_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace rearr
