#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pert {

enum class ErrorKind {
  ModeMismatch,
  VariableMismatch,
  ZeroConstantTerm,
  NonzeroInnerConstant,
  OrderTooLow,
  UnknownSeries,
  InvalidArgument,
  DegenerateAtZero,
  NoConvergence,
  MultipleRoot,
  ZeroResidualOnGrid,
  IllConditioned,
  NoBracketFound,
  InvalidExponent,
  BranchCountMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Domain failure raised by the numeric and symbolic modules.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class ParseErrorKind {
  SyntaxError,
  UnknownIdentifier,
  NegativeExponent,
  NonIntegerExponent,
};

std::string_view to_string(ParseErrorKind kind);

/// Problem-text failure; `position` is the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + " at offset " + std::to_string(position) +
                           ": " + message),
        kind_(kind),
        position_(position),
        message_(message) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
  std::string message_;
};

}  // namespace pert
