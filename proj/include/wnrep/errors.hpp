#pragma once

#include <stdexcept>
#include <string>

namespace wnrep {

/// Machine-readable error categories; the C API maps these onto status codes.
enum class ErrorCode {
  Dimension = 1,
  Validation,
  Range,
  Parse,
  EmptyModule,
  NotOreInjective,
  Unsupported,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(ErrorCode::Dimension, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorCode::Validation, what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorCode::Range, what) {}
};

class EmptyModuleError : public Error {
 public:
  explicit EmptyModuleError(const std::string& what) : Error(ErrorCode::EmptyModule, what) {}
};

class NotOreInjectiveError : public Error {
 public:
  explicit NotOreInjectiveError(const std::string& what)
      : Error(ErrorCode::NotOreInjective, what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(ErrorCode::Unsupported, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorCode::Internal, what) {}
};

/// Syntax error with a 0-based character offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Dimension: return "dimension";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::Range: return "range";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::EmptyModule: return "empty-module";
    case ErrorCode::NotOreInjective: return "not-ore-injective";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace wnrep
