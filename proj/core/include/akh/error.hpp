#pragma once

#include <stdexcept>
#include <string>

namespace akh {

/// Malformed user input: bad rationals, inconsistent model files, unknown
/// catalog names. The CLI maps this to exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace akh
