#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lls {

enum class ErrorKind {
  LengthMismatch,
  NotStrictlyIncreasing,
  OutOfRange,
  A3Violation,
  IndexOutOfRange,
  NotAdmissible,
  NotConnectedAt,
  NotConnected,
  InvalidRange,
  BudgetExceeded,
  InvalidPolicy,
};

/// Which vanishing sequence an error refers to.
enum class Side { Y, Z };

std::string_view to_string(ErrorKind kind);
std::string_view to_string(Side side);

/// Every failure raised by the library. The message is a compact rendering
/// such as "A3Violation(i=0)" or "OutOfRange(side=Z, index=2)".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::optional<Side> side, std::optional<int> index,
        std::string detail = {});

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<Side> side() const noexcept { return side_; }
  std::optional<int> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<Side> side_;
  std::optional<int> index_;
};

}  // namespace lls
