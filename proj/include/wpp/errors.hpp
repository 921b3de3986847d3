#pragma once

#include <stdexcept>
#include <string>

namespace wpp {

// Caller supplied something outside an operation's domain.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A value that should be impossible was produced (e.g. a cyclotomic sum that
// is expected to be rational is not). Always indicates a bug.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

// A truncated family does not reach its stable region inside the window.
class InsufficientWindow : public std::runtime_error {
 public:
  explicit InsufficientWindow(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wpp
