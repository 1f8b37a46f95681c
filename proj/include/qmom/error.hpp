#ifndef QMOM_ERROR_HPP
#define QMOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qmom {

// Single exception type for the whole library. The kind survives the trip
// through the C layer as a status code.
class Error : public std::runtime_error {
public:
  enum class Kind {
    io,        // file not readable / writable
    parse,     // malformed input text
    invalid,   // semantic validation failed (violations present)
    shape,     // matrix dimensions disagree with the ambient data
    domain,    // precondition breach (singular g, cyclic quiver, ...)
    internal,
  };

  Error(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

} // namespace qmom

#endif
