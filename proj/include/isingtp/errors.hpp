#pragma once

#include <stdexcept>
#include <string>

namespace isingtp {

// Input that fails to parse or violates a documented precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rotation system / boundary data that does not describe a plane embedding.
class EmbeddingError : public InputError {
 public:
  using InputError::InputError;
};

// Requested enumeration exceeds a hard cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isingtp
