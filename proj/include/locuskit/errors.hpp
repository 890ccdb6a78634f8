#pragma once

#include <stdexcept>
#include <string>

namespace locuskit {

enum class ErrorCode {
  DomainMGeN,     // operation requires m <= n-1
  DomainInvalid,  // other precondition violation
  Overflow,       // exact integer width exceeded
  NoRoot,         // inversion target at or below the attainable minimum
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what,
                       ErrorCode code = ErrorCode::DomainInvalid)
      : Error(code, what) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what)
      : Error(ErrorCode::Overflow, what) {}
};

class NoRootError : public Error {
 public:
  explicit NoRootError(const std::string& what)
      : Error(ErrorCode::NoRoot, what) {}
};

}  // namespace locuskit
