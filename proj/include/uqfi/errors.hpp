#pragma once

#include <stdexcept>
#include <string>

namespace uqfi {

/// Out-of-range or malformed input. Maps to CLI exit status 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Alice's 00 branch has (numerically) zero probability and cannot be normalized.
class DegenerateBranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant was violated (e.g. a Fisher value below -1e-9).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Unreadable or unwritable file. Maps to CLI exit status 3.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(what + ": " + path), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace uqfi
