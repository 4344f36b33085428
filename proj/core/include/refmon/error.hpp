#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace refmon {

enum class ErrorKind {
  InvalidInput,
  NotCommutative,
  NotAssociative,
  NoIdentityAtZero,
  NotHomomorphism,
  SizeLimitExceeded,
  PreconditionViolated,
  NotSemilattice,
  NotDistributive,
  ParentMismatch,
  NotPure,
  NotDirectSum,
  NotRegular,
  EmbRequired,
  InvalidTriple,
  NotInRep,
  DecompositionFailure,
  InvalidCertificate,
  NotOrderUnit,
  ClaimFailure,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library; kind() drives the CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what);

  ErrorKind kind() const noexcept {
    return _kind;
  }

 private:
  ErrorKind _kind;
};

[[noreturn]] void raise(ErrorKind kind, std::string const& what);

}  // namespace refmon
