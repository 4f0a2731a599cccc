#include "slowcf/errors.hpp"

namespace slowcf {

const char* error_name(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::Pole: return "PoleError";
    case ErrorKind::Degenerate: return "DegenerateError";
    case ErrorKind::RadicandTooLarge: return "RadicandTooLarge";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::GapOrOverlap: return "GapOrOverlap";
    case ErrorKind::BadEndpoints: return "BadEndpoints";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::WrongBranch: return "WrongBranch";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::Stall: return "StallError";
    case ErrorKind::NoFixedPointInCylinder: return "NoFixedPointInCylinder";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::NotFNFamily: return "NotFNFamily";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "DomainError";
}

DomainError::DomainError(ErrorKind kind, std::string message, long index)
    : std::runtime_error(std::move(message)), kind_(kind), index_(index) {}

std::string DomainError::display() const {
  std::string out = name();
  if (index_ >= 0) {
    out += "(" + std::to_string(index_) + ")";
  }
  return out;
}

} // namespace slowcf
