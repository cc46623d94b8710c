#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace htg {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  MismatchedAlphabet,
  OverlappingDomain,
  IncompleteDomain,
  OverlappingRange,
  IncompleteRange,
  ArityMismatch,
  NotFull,
  NotRelated,
  NotTransportable,
  OverlappingBoxes,
  IncompleteBoxes,
  DisjointnessViolation,
  InclusionViolation,
  NotSymmetric,
  CertificateInvalid,
  InconclusiveParameters,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All domain failures raised by the library carry a kind so callers
// (the CLI in particular) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace htg
