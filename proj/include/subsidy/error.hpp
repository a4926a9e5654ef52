#pragma once

#include <stdexcept>
#include <string>

namespace subsidy {

enum class ErrorKind {
  OutOfRange,         // matrix entry outside [0,1], or bad interval bounds
  BadWeights,         // weights do not sum to exactly 1
  NonPositiveWeight,
  DimensionMismatch,
  NotIdentical,       // load balancing on non-identical rows
  NotIdo,             // moving knife on a non identical-ordering instance
  WrongMode,          // chores-only / goods-only operation on the other mode
  DegenerateAgent,    // chores agent with zero total cost in bid-and-take
  PositiveCycle,      // envy graph is not envy-freeable
  TooLarge,           // brute force over the enumeration cap
  Parse,
  InvalidArgument,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BadWeights: return "BadWeights";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotIdentical: return "NotIdentical";
    case ErrorKind::NotIdo: return "NotIdo";
    case ErrorKind::WrongMode: return "WrongMode";
    case ErrorKind::DegenerateAgent: return "DegenerateAgent";
    case ErrorKind::PositiveCycle: return "PositiveCycle";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace subsidy
