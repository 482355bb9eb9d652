#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <string_view>

namespace klr {

enum class ErrorKind {
  NotSquare,
  BadDiagonal,
  BadSign,
  NotSymmetrizable,
  UnknownType,
  BadRank,
  BadIndex,
  LengthMismatch,
  OutOfRange,
  IncompatibleContent,
  NotDominant,
  NotTildeForm,
  PreconditionFail,
  ZeroA12,
  DivisionInexact,
  BadInput,
  TimeBudgetExceeded,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::BadDiagonal: return "BadDiagonal";
    case ErrorKind::BadSign: return "BadSign";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::IncompatibleContent: return "IncompatibleContent";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NotTildeForm: return "NotTildeForm";
    case ErrorKind::PreconditionFail: return "PreconditionFail";
    case ErrorKind::ZeroA12: return "ZeroA12";
    case ErrorKind::DivisionInexact: return "DivisionInexact";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::TimeBudgetExceeded: return "TimeBudgetExceeded";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported through this type; `kind()`
/// is stable and is what the CLI prints in its structured error documents.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Wall-clock bound for long enumerations. A default-constructed budget never
/// expires.
class Budget {
 public:
  using clock = std::chrono::steady_clock;

  Budget() = default;
  explicit Budget(std::chrono::duration<double> limit)
      : limited_(true), deadline_(clock::now() + std::chrono::duration_cast<clock::duration>(limit)) {}

  bool expired() const { return limited_ && clock::now() >= deadline_; }

  /// Throws TimeBudgetExceeded carrying `partial` (a description of the work done so far).
  void check(const std::string& partial) const {
    if (expired()) {
      throw Error(ErrorKind::TimeBudgetExceeded, "time budget exhausted; partial result: " + partial);
    }
  }

 private:
  bool limited_ = false;
  clock::time_point deadline_{};
};

}  // namespace klr
