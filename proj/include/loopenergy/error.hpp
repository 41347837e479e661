#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loopenergy {

enum class ErrorKind {
  IndexOutOfRange,
  DuplicateEdge,
  DuplicateLoop,
  SelfPairInEdgeList,
  IncompatibleOrder,
  InvalidFamily,
  OrderTooLarge,
  OrderTooSmall,
  NoConvergence,
  NotConnected,
  DegenerateSpread,
  UnknownBoundId,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace loopenergy
