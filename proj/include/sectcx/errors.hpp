#pragma once

#include <stdexcept>
#include <string>

namespace sectcx {

/// Violated precondition of a domain operation (bad index, non-monotone
/// height, inconsistent gluing, ...). The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. The CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configurable size cap was exceeded during enumeration.
class ResourceLimitError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A computation was asked for data outside the computed truncation window.
class WindowError : public DomainError {
 public:
  WindowError(const std::string& what, int required_degree)
      : DomainError(what), required_degree_(required_degree) {}
  int required_degree() const noexcept { return required_degree_; }

 private:
  int required_degree_;
};

}  // namespace sectcx
