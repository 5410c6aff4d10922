#pragma once

#include <stdexcept>
#include <string>

namespace curvekit {

// Structural invariant violated; the message names the invariant.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace curvekit
