#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dkern {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised whenever an input is larger than the configured cap of an
// exponential routine. Never silently truncated.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string operation, std::size_t size, std::size_t cap)
      : Error(operation + ": cap exceeded (size " + std::to_string(size) +
              " > cap " + std::to_string(cap) + ")"),
        operation_(std::move(operation)),
        size_(size),
        cap_(cap) {}

  const std::string& operation() const noexcept { return operation_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::string operation_;
  std::size_t size_;
  std::size_t cap_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// A decider was called on a digraph outside the family it decides for.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string family, std::string violation,
                    std::vector<int> witness)
      : Error("precondition failed for " + family + ": " + violation),
        family_(std::move(family)),
        violation_(std::move(violation)),
        witness_(std::move(witness)) {}

  const std::string& family() const noexcept { return family_; }
  const std::string& violation() const noexcept { return violation_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::string family_;
  std::string violation_;
  std::vector<int> witness_;
};

}  // namespace dkern
