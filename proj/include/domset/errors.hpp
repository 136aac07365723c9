#pragma once

#include <stdexcept>
#include <string>

namespace domset {

// Malformed input: bad files, out-of-range ids, invalid parameters.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance exceeds a documented size cap or search budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace domset
