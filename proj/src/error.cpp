#include "dieu/error.hpp"

namespace dieu {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::not_prime: return "not_prime";
    case ErrorCode::precision_policy: return "precision_policy";
    case ErrorCode::precision_too_large: return "precision_too_large";
    case ErrorCode::internal: return "internal";
    case ErrorCode::not_unit: return "not_unit";
    case ErrorCode::v_nonintegral: return "v_nonintegral";
    case ErrorCode::pairing_incompatible: return "pairing_incompatible";
    case ErrorCode::degenerate_pairing: return "degenerate_pairing";
    case ErrorCode::det_budget: return "det_budget";
    case ErrorCode::shape: return "shape";
    case ErrorCode::not_rapoport: return "not_rapoport";
    case ErrorCode::precision_exhausted: return "precision_exhausted";
    case ErrorCode::size_guard: return "size_guard";
    case ErrorCode::inconsistent: return "inconsistent";
    case ErrorCode::key_mismatch: return "key_mismatch";
    case ErrorCode::window: return "window";
    case ErrorCode::parity_mismatch: return "parity_mismatch";
    case ErrorCode::parse: return "parse";
    case ErrorCode::unknown_suite: return "unknown_suite";
  }
  return "unknown";
}

}  // namespace dieu
