#pragma once

#include <stdexcept>
#include <string>

namespace scaffold {

// Bad inputs: malformed scenario files, schema violations, broken invariants.
// The CLI maps these to exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failures: singular or ill-conditioned systems, non-convergent
// solves, statically unsupportable poses. The CLI maps these to exit code 1.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scaffold
