#include "lls/error.hpp"

namespace lls {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::A3Violation: return "A3Violation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotConnectedAt: return "NotConnectedAt";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidPolicy: return "InvalidPolicy";
  }
  return "Unknown";
}

std::string_view to_string(Side side) { return side == Side::Y ? "Y" : "Z"; }

namespace {

// i-indexed errors name the position in the vanishing sequence.
bool indexes_by_i(ErrorKind kind) {
  return kind == ErrorKind::A3Violation || kind == ErrorKind::IndexOutOfRange ||
         kind == ErrorKind::NotConnectedAt;
}

std::string render(ErrorKind kind, std::optional<Side> side, std::optional<int> index,
                   const std::string& detail) {
  std::string out(to_string(kind));
  std::string args;
  if (side) args += "side=" + std::string(to_string(*side));
  if (index) {
    if (!args.empty()) args += ", ";
    args += (indexes_by_i(kind) ? "i=" : "index=") + std::to_string(*index);
  }
  if (!args.empty()) out += "(" + args + ")";
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::optional<Side> side, std::optional<int> index,
             std::string detail)
    : std::runtime_error(render(kind, side, index, detail)),
      kind_(kind),
      side_(side),
      index_(index) {}

}  // namespace lls
