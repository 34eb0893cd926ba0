#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace sg {

// Internal invariant check that stays active in release builds: a violated
// invariant here means a bug, and we prefer a loud throw over silent nonsense.
#define SG_ASSERT(cond)                                                      \
  do {                                                                       \
    if (!(cond)) {                                                           \
      throw ::sg::InternalError(std::string("internal invariant failed: ") + \
                                #cond + " at " + __FILE__ + ":" +            \
                                std::to_string(__LINE__));                   \
    }                                                                        \
  } while (0)

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// User-facing validation failure (bad algebra, bad word, bad surface, ...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
  int line = 0;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

}  // namespace sg
