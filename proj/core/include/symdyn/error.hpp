#pragma once

#include <stdexcept>
#include <string>

namespace symdyn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad symbols, mismatched lengths, invalid graphs.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but outside what the engines can handle.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// Closed form and brute-force count disagree.
class OracleMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

}  // namespace symdyn
