#ifndef DPP_ERROR_HPP
#define DPP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpp {

enum class ErrorCode {
  NotSquare,
  NonFinite,
  NotHermitian,
  SpectrumOutOfRange,
  DecompositionFailure,
  IndexOutOfRange,
  EmptySubset,
  InvalidSubset,
  NotUnitary,
  NotStrictContraction,
  NotPSD,
  DimensionTooLarge,
  DimensionMismatch,
  NumericalInconsistency,
  BlocksNotDisjoint,
  TooManyFactors,
  NumericalBreakdown,
  OutOfRange,
  Disconnected,
  InvalidGraph,
  InvalidArgument,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace dpp

#endif // DPP_ERROR_HPP
