// Size guards for the exponential constructions.  RM_GUARD_OVERRIDE=1 lifts them.
#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rmon {

inline bool guard_override() {
  const char* v = std::getenv("RM_GUARD_OVERRIDE");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

// Throws std::runtime_error unless value <= limit or the override is set.
inline void guard(long long value, long long limit, const std::string& what) {
  if (value > limit && !guard_override()) {
    throw std::runtime_error("guard: " + what + " (" + std::to_string(value) + " > " +
                             std::to_string(limit) + "); set RM_GUARD_OVERRIDE=1 to force");
  }
}

}  // namespace rmon
