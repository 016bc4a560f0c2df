#pragma once

#include <stdexcept>
#include <string>

namespace pairweight {

// Raised when a computation contradicts an identity the library guarantees
// internally (e.g. a weight computed two ways disagrees). Reaching this is
// always a bug, never a property of the input.
struct consistency_fault : std::logic_error {
    explicit consistency_fault(const std::string& what) : std::logic_error(what) {}
};

// Raised when an enumeration would exceed the documented desk-scale guard.
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the text-format parsers; carries a 1-based line number.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

}  // namespace pairweight
