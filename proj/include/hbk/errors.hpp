#ifndef HBK_ERRORS_HPP
#define HBK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hbk {

// All exceptions thrown by the library derive from hbk::error so the CLI
// can map them to exit codes uniformly.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched rank/size between operands (LexVal dimension, matrix shape).
struct dimension_error : error {
    explicit dimension_error(const std::string& msg) : error(msg) {}
};

// An index or split position outside its admissible range.
struct index_error : error {
    explicit index_error(const std::string& msg) : error(msg) {}
};

// Value outside the operation's domain (infinity where a finite value is
// required, zero where a nonzero one is, ...).
struct value_error : error {
    explicit value_error(const std::string& msg) : error(msg) {}
};

// Division by zero, degree-guard overflow.
struct arithmetic_error : error {
    explicit arithmetic_error(const std::string& msg) : error(msg) {}
};

// Singular matrix where an invertible one is required.
struct rank_error : error {
    explicit rank_error(const std::string& msg) : error(msg) {}
};

// An element fails a group or ring membership test (not in SL_n, not in N,
// not in the valuation ring, not in the expected fiber).
struct membership_error : error {
    explicit membership_error(const std::string& msg) : error(msg) {}
};

// A representative does not have the shape an operation requires
// (e.g. psi on a non-diagonal basis).
struct shape_error : error {
    explicit shape_error(const std::string& msg) : error(msg) {}
};

// Unsupported parameter combination (e.g. boundary ops outside n=2, d=2).
struct unsupported_error : error {
    explicit unsupported_error(const std::string& msg) : error(msg) {}
};

// Malformed textual input.
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

} // namespace hbk

#endif
