#pragma once

#include <stdexcept>
#include <string>

namespace ramsey_forge {

// Violated precondition or out-of-domain request (CLI exit code 1).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file or unreadable stream (CLI exit code 2).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ramsey_forge
