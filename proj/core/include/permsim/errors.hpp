#ifndef PERMSIM_ERRORS_HPP
#define PERMSIM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permsim {

// Base class for all domain errors raised by this library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input. `position` is the 0-based byte offset of the
// offending character in the input.
class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position + 1) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Two values from incompatible domains were combined (degree mismatch,
// field mismatch, size mismatch).
class mismatch_error : public error {
public:
  using error::error;
};

// A configured resource bound was exceeded (enumeration too large).
class limit_error : public error {
public:
  using error::error;
};

// An oracle or recovery step produced arithmetic that is impossible for a
// permutation input (non-integer division, negative count).
class consistency_error : public error {
public:
  using error::error;
};

}  // namespace permsim

#endif
