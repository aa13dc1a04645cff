#ifndef CHEVLIE_ERRORS_HPP
#define CHEVLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chevlie {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (root labels, tuples, catalog/claims files).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Structurally valid input that violates a semantic requirement
/// (root not in the system, duplicate label, bad characteristic, ...).
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Jordan-partition request on a non-nilpotent matrix.
class NotNilpotentError : public Error {
public:
  explicit NotNilpotentError(const std::string& what) : Error(what) {}
};

/// Graded operation on an element that mixes degrees.
class NotHomogeneousError : public Error {
public:
  explicit NotHomogeneousError(const std::string& what) : Error(what) {}
};

} // namespace chevlie

#endif
