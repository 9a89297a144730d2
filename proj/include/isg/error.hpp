#pragma once

#include <stdexcept>
#include <string>

namespace isg {

/// Error categories; the CLI maps them onto process exit codes
/// (invalid_input/unsupported/construction -> 2, resource_cap -> 3).
enum class errc {
  invalid_input,
  unsupported,
  resource_cap,
  construction,
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void raise(errc kind, const std::string& what) { throw error(kind, what); }

}  // namespace isg
