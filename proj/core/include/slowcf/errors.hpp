#pragma once

#include <stdexcept>
#include <string>

namespace slowcf {

/// Domain error categories surfaced by the library. The CLI maps every
/// DomainError to exit code 2 and prints name() verbatim.
enum class ErrorKind {
  Pole,                   // Mobius denominator vanishes at the argument
  Degenerate,             // fixed points of the identity requested
  RadicandTooLarge,       // squarefree reduction cannot be certified
  NotUnimodular,          // partition interval fails pq' - p'q = -1
  GapOrOverlap,           // partition intervals do not chain
  BadEndpoints,           // partition does not start at 0 / end at 1
  OutOfRange,             // point outside [0,1]
  WrongBranch,            // forward step with a digit not in locate()
  UnknownName,            // unrecognized builtin SCFA name
  Stall,                  // stream encoder cannot separate a boundary value
  NoFixedPointInCylinder, // corrupted itinerary handed to decode
  NotInDomain,            // itinerary never enters the inducing set E
  NotFNFamily,            // operation restricted to the F_N family
  AlphabetMismatch,       // Cuntz monomials over different alphabets
  SearchExhausted,        // transducer edge search bound hit
  ParseError,             // malformed textual input
};

const char* error_name(ErrorKind k) noexcept;

class DomainError : public std::runtime_error {
public:
  DomainError(ErrorKind kind, std::string message, long index = -1);

  ErrorKind kind() const noexcept { return kind_; }
  /// 1-based index for indexed errors (NotUnimodular(i), Stall position, ...);
  /// -1 when not applicable.
  long index() const noexcept { return index_; }
  const char* name() const noexcept { return error_name(kind_); }
  /// "NotUnimodular(2)" when indexed, "PoleError" otherwise.
  std::string display() const;

private:
  ErrorKind kind_;
  long index_;
};

} // namespace slowcf
