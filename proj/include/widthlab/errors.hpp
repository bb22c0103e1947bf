#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

// A hypothesis of a construction does not hold for the input. Carries the
// offending embedding when one is available.
class PreconditionFailed : public std::runtime_error {
 public:
  PreconditionFailed(const std::string& what, std::vector<Vertex> witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  std::vector<Vertex> witness_;
};

// A bound or structural guarantee that should hold by construction failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace widthlab
