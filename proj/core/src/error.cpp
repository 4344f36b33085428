#include "refmon/error.hpp"

namespace refmon {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotSemilattice: return "NotSemilattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotDirectSum: return "NotDirectSum";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::EmbRequired: return "EmbRequired";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::NotInRep: return "NotInRep";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::InvalidCertificate: return "InvalidCertificate";
    case ErrorKind::NotOrderUnit: return "NotOrderUnit";
    case ErrorKind::ClaimFailure: return "ClaimFailure";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string const& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      _kind(kind) {}

void raise(ErrorKind kind, std::string const& what) {
  throw Error(kind, what);
}

}  // namespace refmon
