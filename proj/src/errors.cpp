#include "mss/errors.hpp"

namespace mss {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_params: return "InvalidParams";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::unsupported_hash: return "UnsupportedHash";
    case Errc::entropy_failure: return "EntropyFailure";
    case Errc::missing_share: return "MissingShare";
    case Errc::capacity_exceeded: return "CapacityExceeded";
    case Errc::unknown_secret: return "UnknownSecret";
    case Errc::not_authorized: return "NotAuthorized";
    case Errc::no_such_entry: return "NoSuchEntry";
    case Errc::unknown_row: return "UnknownRow";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::parse_error: return "ParseError";
    case Errc::fingerprint_mismatch: return "FingerprintMismatch";
    case Errc::version_unsupported: return "VersionUnsupported";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace mss
