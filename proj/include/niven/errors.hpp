#pragma once

#include <stdexcept>
#include <string>

namespace niven {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violation on an operation's mathematical domain
// (zero gcd arguments, base < 2, Niven-ness of zero, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Requested an inverse or order of an element that is not a unit.
class NotInvertibleError : public DomainError {
 public:
  explicit NotInvertibleError(const std::string& what) : DomainError(what) {}
};

// A configurable resource limit was hit (iteration cap, output size cap).
// Never silent: callers see exactly which limit fired.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

// Predicted output would exceed the bit-length cap.
class SizeCapError : public ResourceError {
 public:
  explicit SizeCapError(const std::string& what) : ResourceError(what) {}
};

// Parameter validation failure. `condition()` names the violated rule so
// callers can distinguish failures programmatically.
class ValidationError : public Error {
 public:
  ValidationError(std::string condition, const std::string& what)
      : Error(what), condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

// A requested digit sum s fails the admissibility conditions.
class InadmissibleError : public Error {
 public:
  InadmissibleError(std::string condition, const std::string& what)
      : Error(what), condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

}  // namespace niven
