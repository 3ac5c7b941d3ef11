#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tropcount {

enum class ErrorKind {
  SingularMatrix,
  InfiniteCokernel,
  NotSymmetric,
  NotPositiveDefinite,
  SingularPolarization,
  BudgetExceeded,
  DiagramDoesNotCommute,
  NotIsogeny,
  UnsupportedRank,
  UnsupportedDimension,
  Disconnected,
  GenusZero,
  NonPrimitiveSlope,
  TooLarge,
  ConditionViolated,
  MixedDiscriminant,
  DimensionMismatch,
  InvalidArgument,
  Parse,
};

inline const char *to_string(ErrorKind k) {
  switch (k) {
  case ErrorKind::SingularMatrix: return "SingularMatrix";
  case ErrorKind::InfiniteCokernel: return "InfiniteCokernel";
  case ErrorKind::NotSymmetric: return "NotSymmetric";
  case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
  case ErrorKind::SingularPolarization: return "SingularPolarization";
  case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  case ErrorKind::DiagramDoesNotCommute: return "DiagramDoesNotCommute";
  case ErrorKind::NotIsogeny: return "NotIsogeny";
  case ErrorKind::UnsupportedRank: return "UnsupportedRank";
  case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
  case ErrorKind::Disconnected: return "Disconnected";
  case ErrorKind::GenusZero: return "GenusZero";
  case ErrorKind::NonPrimitiveSlope: return "NonPrimitiveSlope";
  case ErrorKind::TooLarge: return "TooLarge";
  case ErrorKind::ConditionViolated: return "ConditionViolated";
  case ErrorKind::MixedDiscriminant: return "MixedDiscriminant";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is stable and is what
/// callers (and the CLI exit-code mapping) switch on.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Raised when an enumeration would exceed its candidate budget. The
/// candidate count is computed up front, so nothing has run yet.
class BudgetExceeded : public Error {
public:
  BudgetExceeded(std::uint64_t candidates, std::uint64_t budget)
      : Error(ErrorKind::BudgetExceeded,
              std::to_string(candidates) + " candidates exceed budget " +
                  std::to_string(budget)),
        candidates_(candidates), budget_(budget) {}

  std::uint64_t candidates() const noexcept { return candidates_; }
  std::uint64_t budget() const noexcept { return budget_; }

private:
  std::uint64_t candidates_;
  std::uint64_t budget_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string &what) {
  throw Error(kind, what);
}

} // namespace tropcount
