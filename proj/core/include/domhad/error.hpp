#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace domhad {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments to a graph constructor (self-loop, endpoint out of range).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Caller broke a documented precondition that is cheap to check.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind { kBadHeader, kTruncated, kTooLarge, kBadPayload, kTrailingData, kBadEdgeList };

  ParseError(Kind kind, std::size_t offset, const std::string& what)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), kind_(kind), offset_(offset) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// The request exceeds a configured size cap (vertex capacity or exact-search cap).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A search ran past its deadline.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

/// Input to the 2K2-free extractors contains an induced 2K2; carries the four witness vertices.
class NotTwoK2FreeError : public Error {
 public:
  explicit NotTwoK2FreeError(std::vector<int> witness);
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

/// A forced structural fact of the extraction failed to hold. Unreachable on
/// correct input; the message names the claim and the witness vertices.
class ExtractionError : public Error {
 public:
  ExtractionError(std::string claim, std::vector<int> witness, const std::string& detail);
  const std::string& claim() const noexcept { return claim_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::string claim_;
  std::vector<int> witness_;
};

}  // namespace domhad
