#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace propmod {

// Base of everything the library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition.
struct InputError : Error {
  using Error::Error;
};

// A configured cap (branches, scan points, genus) was exceeded.
struct ResourceError : Error {
  ResourceError(const std::string& what, std::size_t count)
      : Error(what + " (count " + std::to_string(count) + ")"), count(count) {}
  std::size_t count;
};

}  // namespace propmod
