#pragma once

#include <stdexcept>
#include <string>

namespace rmcsst {

// Thrown when an operation would require enumerating a space beyond its
// documented cap (message-space enumeration, oracle-scale subspace search,
// oversized matrix construction). Callers that can fall back to a closed
// form should catch this and do so.
class EnumerationCapError : public std::runtime_error {
 public:
  explicit EnumerationCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rmcsst
