#pragma once

#include <stdexcept>
#include <string>

namespace polyspec {

// Base class for all errors raised on bad input.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : input_error {
    using input_error::input_error;
};

struct singular_matrix_error : input_error {
    using input_error::input_error;
};

struct gcd_error : input_error {
    using input_error::input_error;
};

struct validation_error : input_error {
    using input_error::input_error;
};

struct simpliciality_error : input_error {
    using input_error::input_error;
};

struct shape_error : input_error {
    using input_error::input_error;
};

struct reducedness_error : input_error {
    using input_error::input_error;
};

struct domain_error : input_error {
    using input_error::input_error;
};

struct not_applicable_error : input_error {
    using input_error::input_error;
};

struct range_error : input_error {
    using input_error::input_error;
};

struct parse_error : input_error {
    using input_error::input_error;
};

// A failed internal cross-check.  Signals a bug in this library, never bad
// user input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

}  // namespace polyspec
