// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace addcomb {

/// Base class for all addcomb errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition or argument violation (CLI maps this to exit code 2).
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

/// A question was asked beyond the finite window (exit code 3).
class WindowError : public Error {
 public:
  explicit WindowError(const std::string& what) : Error(what) {}
};

/// Counting or memory capacity exceeded; never silent wraparound (exit code 3).
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

/// Malformed input file; carries a 1-based line number when known.
class FileParseError : public Error {
 public:
  FileParseError(const std::string& what, std::size_t line)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A Blocks certificate failed re-validation; names the offending sum.
class BlocksInvalidError : public Error {
 public:
  BlocksInvalidError(const std::string& what, std::uint64_t popular_sum)
      : Error(what), popular_sum_(popular_sum) {}
  std::uint64_t popular_sum() const { return popular_sum_; }

 private:
  std::uint64_t popular_sum_;
};

}  // namespace addcomb
