#pragma once

#include <stdexcept>
#include <string>

namespace rrto {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Contract violations on the simulated runtime surface.
struct DuplicateKernelId : Error {
  explicit DuplicateKernelId(const std::string& id)
      : Error("kernel id already registered: " + id) {}
};

struct IndexMismatch : Error {
  IndexMismatch(uint64_t got, uint64_t want)
      : Error("trace append index " + std::to_string(got) + ", expected " +
              std::to_string(want)) {}
};

// Trace file could not be parsed; `line` is 1-based.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct MalformedFrame : Error {
  using Error::Error;
};

struct SizeMismatch : Error {
  using Error::Error;
};

struct TransportError : Error {
  using Error::Error;
};

struct ProtocolError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct MismatchedWorkloads : Error {
  using Error::Error;
};

}  // namespace rrto
