#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistder {

enum class ErrorKind {
  // group construction
  NotLatinSquare,
  NoIdentity,
  NoInverse,
  NotAssociative,
  UnsupportedParameter,
  // homomorphisms and handles
  NotAHomomorphism,
  GroupMismatch,
  // groupoid
  NotComposable,
  NotSupportedForScope,
  NotLocallyFinite,
  // derivations
  NotADerivation,
  ScopeExceeded,
  NotCentralElement,
  NotAHomomorphismToC,
  WellDefinednessError,
  GroupTooLarge,
  // structure
  CenterNotNormal,
  NotASubgroup,
  UnsupportedSubgroup,
  // front end
  SpecError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::NotSupportedForScope: return "NotSupportedForScope";
    case ErrorKind::NotLocallyFinite: return "NotLocallyFinite";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::ScopeExceeded: return "ScopeExceeded";
    case ErrorKind::NotCentralElement: return "NotCentralElement";
    case ErrorKind::NotAHomomorphismToC: return "NotAHomomorphismToC";
    case ErrorKind::WellDefinednessError: return "WellDefinednessError";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::CenterNotNormal: return "CenterNotNormal";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::UnsupportedSubgroup: return "UnsupportedSubgroup";
    case ErrorKind::SpecError: return "SpecError";
  }
  return "Unknown";
}

// Process exit code used by the command-line front end:
// 2 malformed or invalid input (including tables that are not groups and
// maps that are not homomorphisms), 3 scope or size limits, 4 a
// mathematical witness about the requested object.
constexpr int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLatinSquare:
    case ErrorKind::NoIdentity:
    case ErrorKind::NoInverse:
    case ErrorKind::NotAssociative:
    case ErrorKind::NotAHomomorphism:
    case ErrorKind::SpecError:
    case ErrorKind::UnsupportedParameter:
    case ErrorKind::GroupMismatch:
      return 2;
    case ErrorKind::GroupTooLarge:
    case ErrorKind::ScopeExceeded:
    case ErrorKind::NotSupportedForScope:
    case ErrorKind::UnsupportedSubgroup:
      return 3;
    default:
      return 4;
  }
}

/// Exception carrying a machine-readable kind and a human-readable witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace twistder
