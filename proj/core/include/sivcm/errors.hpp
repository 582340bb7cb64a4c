#pragma once

#include <stdexcept>
#include <string>

namespace sivcm {

/// Error categories surfaced by the library. The CLI prints these as a
/// single machine-parseable line `Code: message` on stderr.
enum class errc {
  non_finite,
  not_symmetric,
  singular_after_ridge,
  empty_window,
  degenerate_input,
  no_feasible_point,
  too_few_observations,
  all_infinite,
  malformed_csv,
  invalid_argument,
  io_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sivcm
