#pragma once

#include <stdexcept>
#include <string>

namespace optcode {

// Precondition or numeric-domain violation (bad probabilities, divergent
// partition sums, size mismatches). Maps to CLI exit code 3.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed command line. Maps to CLI exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// File or stream failure, including undecodable input. Maps to CLI exit code 4.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace optcode
