#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace satgame {

// Base for everything this library throws on purpose. Catch sites key off the
// subtype: validation-style problems are caller errors, bracket failures are
// solver diagnostics.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Geometric precondition broken: coincident points, non-finite coordinates.
struct DegenerateGeometryError : Error {
  using Error::Error;
};

namespace detail {
inline std::string join_issues(const std::vector<std::string>& issues) {
  std::string msg = "invalid input";
  const char* sep = ": ";
  for (const auto& issue : issues) {
    msg += sep;
    msg += issue;
    sep = "; ";
  }
  return msg;
}
}  // namespace detail

// A config or scenario was rejected. Carries one message per offending field
// so callers can report everything at once instead of fixing fields one by
// one.
struct ValidationError : Error {
  explicit ValidationError(std::vector<std::string> problems)
      : Error(detail::join_issues(problems)), issues(std::move(problems)) {}

  std::vector<std::string> issues;
};

// A root/bisection bracket failed to enclose the sign change it promised.
struct BracketError : Error {
  using Error::Error;
};

}  // namespace satgame
