#pragma once

#include <stdexcept>
#include <string>

namespace riemstats {

/// Invalid input data or configuration. The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A variable (or deviation vector) has zero spread, so a correlation-style
/// quotient is undefined. The CLI maps this to exit code 2.
class degenerate_variance_error : public std::runtime_error {
 public:
  explicit degenerate_variance_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace riemstats
