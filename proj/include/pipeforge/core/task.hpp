#pragma once

#include <string>

#include "pipeforge/core/error.hpp"

namespace pipeforge {

enum class Task { Classification, Regression };

inline const char* to_string(Task t) { return t == Task::Classification ? "classification" : "regression"; }

inline Task parse_task(const std::string& s) {
  if (s == "classification") return Task::Classification;
  if (s == "regression") return Task::Regression;
  throw FormatError("unknown task '" + s + "'");
}

}  // namespace pipeforge
