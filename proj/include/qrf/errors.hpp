#pragma once

#include <stdexcept>
#include <string>

namespace qrf {

enum class Err {
  // group table validation
  NotClosed,
  NotAssociative,
  NoIdentity,
  NonInvertible,
  InvalidOrder,
  IndexOutOfRange,
  // states and operators
  LabelOutOfRange,
  EmptyInput,
  EmptyKeepSet,
  TupleLengthMismatch,
  // representations
  NotUnitary,
  NotHomomorphism,
  IdentityNotMappedToIdentity,
  GroupMismatch,
  // frame transforms
  SameFrameIndices,
  DimensionMismatch,
  DomainViolation,
  NotAFramePart,
  // entanglement diagnostics
  InvalidBipartition,
  NotTwoQubit,
  // suites, scenarios, CLI
  ConfigError,
  ParseError,
  ValidationError,
  CheckFailure,
};

constexpr const char* err_name(Err e) {
  switch (e) {
    case Err::NotClosed: return "NotClosed";
    case Err::NotAssociative: return "NotAssociative";
    case Err::NoIdentity: return "NoIdentity";
    case Err::NonInvertible: return "NonInvertible";
    case Err::InvalidOrder: return "InvalidOrder";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::LabelOutOfRange: return "LabelOutOfRange";
    case Err::EmptyInput: return "EmptyInput";
    case Err::EmptyKeepSet: return "EmptyKeepSet";
    case Err::TupleLengthMismatch: return "TupleLengthMismatch";
    case Err::NotUnitary: return "NotUnitary";
    case Err::NotHomomorphism: return "NotHomomorphism";
    case Err::IdentityNotMappedToIdentity: return "IdentityNotMappedToIdentity";
    case Err::GroupMismatch: return "GroupMismatch";
    case Err::SameFrameIndices: return "SameFrameIndices";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::DomainViolation: return "DomainViolation";
    case Err::NotAFramePart: return "NotAFramePart";
    case Err::InvalidBipartition: return "InvalidBipartition";
    case Err::NotTwoQubit: return "NotTwoQubit";
    case Err::ConfigError: return "ConfigError";
    case Err::ParseError: return "ParseError";
    case Err::ValidationError: return "ValidationError";
    case Err::CheckFailure: return "CheckFailure";
  }
  return "UnknownError";
}

/// Library-wide exception type carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& detail)
      : std::runtime_error(std::string(err_name(code)) + ": " + detail), code_(code) {}

  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& detail) { throw Error(code, detail); }

}  // namespace qrf
