#pragma once

#include <stdexcept>
#include <string>

namespace amm {

/// Malformed user input: bad edge indices, unparsable graph6, bad files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside the hypothesis it is defined under
/// (non-tree where a tree is required, repeated eigenvalues, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computed result contradicts a proven statement. Carries a graph6
/// certificate of the offending graph when one is available.
class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(const std::string& what, std::string certificate = {})
      : std::runtime_error(certificate.empty() ? what : what + " [graph6 " + certificate + "]"),
        certificate_(std::move(certificate)) {}

  const std::string& certificate() const noexcept { return certificate_; }

 private:
  std::string certificate_;
};

}  // namespace amm
