#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pinpoint {

enum class ErrorCode {
  kParse,
  kDuplicateId,
  kUnsupportedConstruct,
  kNotEntailed,
  kResourceLimit,
  kPreconditionViolated,
  kEmptyMember,
  kNoRepair,
  kCapExceeded,
  kDisagreement,
  kIo,
  kInvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace pinpoint
