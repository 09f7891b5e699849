#ifndef WEYLBRAID_ERRORS_HPP
#define WEYLBRAID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weylbraid {

// Invalid domain input: malformed specs, non-root vectors, tuples whose
// product is not the identity, and similar caller errors.
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured search or closure cap was hit.  The result so far is
// discarded; partial answers are never returned.
class cap_exceeded_error : public std::runtime_error {
public:
  explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check that must hold by theory failed.  Indicates a bug
// in this library, never a property of the input.
class theorem_violation_error : public std::logic_error {
public:
  explicit theorem_violation_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace weylbraid

#endif
