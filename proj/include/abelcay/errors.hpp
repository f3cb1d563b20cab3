#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abelcay {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular (det = 0)") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class UnattainableDiameter : public Error {
 public:
  using Error::Error;
};

// The generator set does not reach every group element.
class NotGenerating : public Error {
 public:
  NotGenerating(std::uint64_t reachable, std::uint64_t order)
      : Error("generators reach " + std::to_string(reachable) + " of " +
              std::to_string(order) + " elements"),
        reachable_(reachable),
        order_(order) {}

  std::uint64_t reachable() const { return reachable_; }
  std::uint64_t order() const { return order_; }

 private:
  std::uint64_t reachable_;
  std::uint64_t order_;
};

}  // namespace abelcay
