#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lingapprox {

enum class ErrorCode {
  InvalidUniverse,
  InvalidMembership,
  UniverseMismatch,
  ArityError,
  InvalidAlpha,
  EmptyReference,
  ShapeOutOfRange,
  LengthMismatch,
  UnknownModifier,
  InvalidVocabulary,
  UnknownToken,
  EmptyExpression,
  DanglingModifier,
  UnbalancedParens,
  ExpressionTooDeep,
  UnknownName,
  EmptyFuzzySet,
  VocabularyEmpty,
  EmptyQuantifierSet,
  InvalidConfig,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lingapprox
