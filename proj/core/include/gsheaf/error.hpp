#pragma once

#include <stdexcept>
#include <string>

namespace gsheaf {

/// A mathematical precondition failed (non-semisimple input, non-derivation,
/// divergent limit, ...). The message names the failure.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input. The message carries the offending field path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gsheaf
