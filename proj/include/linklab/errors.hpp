#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace linklab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A permutation pair that is not a valid connected planar map.
class InvalidMapError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  SizeLimitError(std::uint64_t requested, std::uint64_t cap)
      : Error("size " + std::to_string(requested) + " exceeds configured cap " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyTreeError : public Error {
 public:
  EmptyTreeError() : Error("a plane tree needs at least one edge") {}
};

class RejectionBudgetError : public Error {
 public:
  RejectionBudgetError(std::uint64_t tries, std::uint64_t accepted)
      : Error("rejection budget exhausted after " + std::to_string(tries) +
              " tries (" + std::to_string(accepted) + " accepted)"),
        tries_(tries),
        accepted_(accepted) {}
  std::uint64_t tries() const noexcept { return tries_; }
  std::uint64_t accepted() const noexcept { return accepted_; }

 private:
  std::uint64_t tries_;
  std::uint64_t accepted_;
};

class ClassificationError : public Error {
 public:
  using Error::Error;
};

class MissingDataError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace linklab
