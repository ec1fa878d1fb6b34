#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tropical {

// Stable error identifiers. The CLI prints these names verbatim.
enum class ErrorCode {
  DivisionByBottom,
  BottomPower,
  InvalidArgument,
  NotEntire,
  NotSquare,
  DimensionMismatch,
  PermutationEngineTooLarge,
  TooManyFunctions,
  InvalidCertificate,
  NotInSpan,
  CommonRoot,
  BadCoefficients,
  EmptyColumn,
  InsufficientSamples,
  ConditionViolated,
  ConstantFunction,
  ParseError,
  NonLinearTerm,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(message), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }

  // Offending position: function index, matrix column, parse offset, ...
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace tropical
