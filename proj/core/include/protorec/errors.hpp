#pragma once

#include <stdexcept>
#include <string>

namespace protorec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input files (bad TSV layout, unreadable model files).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Structurally valid input that violates a data contract (duplicate ids,
// unknown languages, empty training sets).
class DataError : public Error {
 public:
  using Error::Error;
};

// A guard limit was exceeded (e.g. the pattern-graph node cap).
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace protorec
