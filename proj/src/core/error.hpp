#pragma once

#include <stdexcept>
#include <string>

namespace rgnn {

// Error taxonomy shared with the C API status codes.
enum class ErrorCode {
  invalid_argument = 1,
  io = 2,
  size_limit = 3,
  local_collision = 4,
  generation_failure = 5,
  diverged = 6,
  metric_undefined = 7,
  internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Error invalid_argument_error(const std::string& what) {
  return Error(ErrorCode::invalid_argument, what);
}
inline Error io_error(const std::string& what) { return Error(ErrorCode::io, what); }
inline Error size_limit_error(const std::string& what) { return Error(ErrorCode::size_limit, what); }
inline Error local_collision_error(const std::string& what) {
  return Error(ErrorCode::local_collision, what);
}
inline Error generation_error(const std::string& what) {
  return Error(ErrorCode::generation_failure, what);
}
inline Error diverged_error(const std::string& what) { return Error(ErrorCode::diverged, what); }
inline Error metric_undefined_error(const std::string& what) {
  return Error(ErrorCode::metric_undefined, what);
}

}  // namespace rgnn
