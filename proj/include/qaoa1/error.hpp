#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qaoa1 {

// Numeric values are shared with the C API (qaoa1_status).
enum class ErrorCode : int {
  kParse = 1,
  kDuplicateEdge = 2,
  kRange = 3,
  kParameter = 4,
  kGeneration = 5,
  kPrecondition = 6,
  kCapacity = 7,
  kResource = 8,
  kUnsupported = 9,
  kIo = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct DuplicateEdgeError : Error {
  explicit DuplicateEdgeError(const std::string& what)
      : Error(ErrorCode::kDuplicateEdge, what) {}
};

struct RangeError : Error {
  explicit RangeError(const std::string& what) : Error(ErrorCode::kRange, what) {}
};

struct ParameterError : Error {
  explicit ParameterError(const std::string& what)
      : Error(ErrorCode::kParameter, what) {}
};

struct GenerationError : Error {
  explicit GenerationError(const std::string& what)
      : Error(ErrorCode::kGeneration, what) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what)
      : Error(ErrorCode::kPrecondition, what) {}
};

struct CapacityError : Error {
  explicit CapacityError(const std::string& what)
      : Error(ErrorCode::kCapacity, what) {}
};

struct ResourceError : Error {
  explicit ResourceError(const std::string& what)
      : Error(ErrorCode::kResource, what) {}
};

struct UnsupportedCaseError : Error {
  explicit UnsupportedCaseError(const std::string& what)
      : Error(ErrorCode::kUnsupported, what) {}
};

}  // namespace qaoa1
