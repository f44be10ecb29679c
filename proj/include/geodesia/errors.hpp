#pragma once

#include <stdexcept>
#include <string>

namespace geodesia {

enum class ErrorKind {
  out_of_range,
  self_loop,
  bad_size,
  unreachable,
  cap_exceeded,
  not_connected,
  solve_cap_exceeded,
  oracle_blowup,
  arity_mismatch,
  disconnected_result,
  size_cap_exceeded,
  parse_error,
};

const char* to_string(ErrorKind kind);

/// All library failure modes carry a kind so callers (CLI, audit suite)
/// can map them to exit statuses or SKIPPED verdicts without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace geodesia
