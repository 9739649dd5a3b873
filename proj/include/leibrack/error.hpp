#pragma once

#include <stdexcept>
#include <string>

namespace leibrack {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape mismatches, index range violations.
struct dimension_error : error {
    explicit dimension_error(const std::string& msg) : error(msg) {}
};

// Attempt to invert a singular matrix or divide by zero.
struct singular_error : error {
    explicit singular_error(const std::string& msg) : error(msg) {}
};

// Malformed input: unparsable scalar, bad JSON document, unknown family name.
struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};

// An operation's precondition does not hold for the given object
// (e.g. classification of an algebra whose commutator ideal is not a line).
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// A locally defined operation was evaluated outside its chart.
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// Internal consistency breach; indicates a bug, not bad input.
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

}  // namespace leibrack
