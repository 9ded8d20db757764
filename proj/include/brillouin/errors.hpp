#pragma once

#include <stdexcept>
#include <string>

namespace brillouin {

// A query reached past the radius up to which an enumerated point set is
// guaranteed complete. CLI maps this to its own exit code.
class horizon_error : public std::runtime_error {
 public:
  explicit horizon_error(const std::string& what) : std::runtime_error(what) {}
};

// A Monte Carlo window failed the containment probe (the region of interest
// leaks through the window boundary).
class window_too_small_error : public std::runtime_error {
 public:
  explicit window_too_small_error(const std::string& what) : std::runtime_error(what) {}
};

// Level-set tracing could not find a starting point on the scan line.
class seed_not_found_error : public std::runtime_error {
 public:
  explicit seed_not_found_error(const std::string& what) : std::runtime_error(what) {}
};

// The corrector stalled during level-set continuation.
class step_failure_error : public std::runtime_error {
 public:
  step_failure_error(const std::string& what, double x, double y)
      : std::runtime_error(what), where_x(x), where_y(y) {}
  double where_x = 0.0;
  double where_y = 0.0;
};

// A statistical check discarded too many samples to conclude anything.
class inconclusive_error : public std::runtime_error {
 public:
  explicit inconclusive_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace brillouin
