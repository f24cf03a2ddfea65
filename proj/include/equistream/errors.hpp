#pragma once

#include <stdexcept>
#include <string>

namespace equistream {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfDepth : Error {
  explicit OutOfDepth(const std::string& what) : Error("OutOfDepth: " + what) {}
};

struct NotPeriodic : Error {
  explicit NotPeriodic(const std::string& what) : Error("NotPeriodic: " + what) {}
};

struct DepthMismatch : Error {
  explicit DepthMismatch(const std::string& what) : Error("DepthMismatch: " + what) {}
};

struct NotMonotone : Error {
  explicit NotMonotone(const std::string& what) : Error("NotMonotone: " + what) {}
};

struct MissingValue : Error {
  explicit MissingValue(const std::string& what) : Error("MissingValue: " + what) {}
};

struct DomainViolation : Error {
  explicit DomainViolation(const std::string& what) : Error("DomainViolation: " + what) {}
};

struct UnboundedDomain : Error {
  explicit UnboundedDomain(const std::string& what) : Error("UnboundedDomain: " + what) {}
};

struct BadRho : Error {
  explicit BadRho(const std::string& what) : Error("BadRho: " + what) {}
};

struct BadParameter : Error {
  explicit BadParameter(const std::string& what) : Error("BadParameter: " + what) {}
};

struct DepthTooSmall : Error {
  explicit DepthTooSmall(const std::string& what) : Error("DepthTooSmall: " + what) {}
};

struct UnknownName : Error {
  explicit UnknownName(const std::string& what) : Error("UnknownName: " + what) {}
};

struct SizeLimit : Error {
  explicit SizeLimit(const std::string& what) : Error("SizeLimit: " + what) {}
};

struct GeneratorError : Error {
  explicit GeneratorError(const std::string& what) : Error("GeneratorError: " + what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

}  // namespace equistream
