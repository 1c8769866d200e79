#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace roughmap {

enum class Errc {
  EmptyUniverse,
  BadLabels,
  TooLarge,
  MixedUniverse,
  BadElement,
  NotAPartition,
  NotEquivalence,
  BadImage,
  EmptyReference,
  NoSurjection,
  BadInstance,
  BadCursor,
  ParseError,
  ValidationError,
  IoError,
  UnknownClaim,
};

std::string_view errc_name(Errc code);

// Every failure in the library surfaces as this exception. `detail` carries
// the machine-readable part (the failed equivalence condition, the offending
// field path, ...) when there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace roughmap
