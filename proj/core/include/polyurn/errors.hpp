#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyurn {

// Base for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnbalancedMatrix : public Error {
 public:
  explicit UnbalancedMatrix(std::size_t index)
      : Error("replacement matrix " + std::to_string(index + 1) +
              " is not balanced (a + b != c + d)"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class EmptyUrn : public Error {
 public:
  EmptyUrn() : Error("urn must start with at least one ball (b0 + w0 > 0)") {}
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class NonZeroResidual : public Error {
 public:
  NonZeroResidual(std::string equation, std::uint64_t n, std::int64_t k)
      : Error("non-zero residual in " + equation + " at n=" + std::to_string(n) +
              ", k=" + std::to_string(k)),
        equation_(std::move(equation)),
        n_(n),
        k_(k) {}
  const std::string& equation() const noexcept { return equation_; }
  std::uint64_t n() const noexcept { return n_; }
  std::int64_t k() const noexcept { return k_; }

 private:
  std::string equation_;
  std::uint64_t n_;
  std::int64_t k_;
};

class BoundExceeded : public Error {
 public:
  BoundExceeded(std::size_t size, std::size_t bound)
      : Error("size " + std::to_string(size) + " exceeds enumeration bound " +
              std::to_string(bound)) {}
};

class InconsistentTree : public Error {
 public:
  using Error::Error;
};

class EmptySample : public Error {
 public:
  EmptySample() : Error("sample is empty") {}
};

class InsufficientCounts : public Error {
 public:
  using Error::Error;
};

}  // namespace polyurn
