#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dieu {

enum class ErrorCode {
  invalid_argument,
  not_prime,
  precision_policy,
  precision_too_large,
  internal,
  not_unit,
  v_nonintegral,
  pairing_incompatible,
  degenerate_pairing,
  det_budget,
  shape,
  not_rapoport,
  precision_exhausted,
  size_guard,
  inconsistent,
  key_mismatch,
  window,
  parity_mismatch,
  parse,
  unknown_suite,
};

std::string_view to_string(ErrorCode code);

// Domain error carrying a machine-readable code and, where it applies, the
// offending slot index.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::optional<int> slot = std::nullopt)
      : std::runtime_error(message), code_(code), slot_(slot) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<int> slot() const noexcept { return slot_; }

 private:
  ErrorCode code_;
  std::optional<int> slot_;
};

}  // namespace dieu
