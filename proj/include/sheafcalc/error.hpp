#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sheafcalc {

enum class ErrorKind {
  NonIntegralChernClass,
  NonIntegralChi,
  UnsupportedRank,
  ArityError,
  NotComputable,
  Inconsistent,
  SyntaxError,
  RankError,
  UnknownIdentifier,
  MissingInvariant,
  HypothesisError,
  NegativeLength,
  NegativeCount,
  NegativeCurveClass,
  DomainError,
  InvalidThreefold,
  Overflow,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Every engine failure is reported through this type; `name()` is the typed
// error name surfaced verbatim by the CLI and the C API.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

// Parse failures carry the byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::SyntaxError,
              what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace sheafcalc
