#pragma once

#include <stdexcept>
#include <string>

namespace laycon {

// Raised for malformed inputs: bad graph files, layer-rule violations,
// out-of-contract arguments. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a numerical routine cannot deliver its result (iteration
// caps, state blowup, indeterminate classification). CLI exit code 2.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace laycon
