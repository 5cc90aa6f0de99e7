#pragma once

#include <stdexcept>
#include <string>

namespace mss {

enum class Errc {
  invalid_params,
  length_mismatch,
  index_out_of_range,
  unsupported_hash,
  entropy_failure,
  missing_share,
  capacity_exceeded,
  unknown_secret,
  not_authorized,
  no_such_entry,
  unknown_row,
  invariant_violation,
  parse_error,
  fingerprint_mismatch,
  version_unsupported,
  io_error,
};

const char* errc_name(Errc code) noexcept;

// Single exception type for the whole library; the code names the failure
// class and drives the CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mss
